#include "md/blocks.hpp"

#include <algorithm>

#include "md/errors.hpp"

namespace md {

bool BlockTree::is_cut_vertex(int v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockTree::leaf_blocks() const {
  std::vector<int> out;
  for (int b = 0; b < block_count(); ++b) {
    if (incidence[b].size() <= 1) out.push_back(b);
  }
  return out;
}

namespace {

struct DfsState {
  const Graph* g;
  std::vector<int> disc, low, parent;
  std::vector<char> is_cut;
  std::vector<EdgeId> stack;
  BlockTree* out;
  int timer = 0;

  void pop_block(EdgeId until) {
    std::vector<EdgeId> edges;
    while (true) {
      const EdgeId e = stack.back();
      stack.pop_back();
      edges.push_back(e);
      if (e == until) break;
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> verts;
    for (EdgeId e : edges) {
      verts.push_back(g->edge(e).first);
      verts.push_back(g->edge(e).second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out->block_vertices.push_back(std::move(verts));
    out->block_edges.push_back(std::move(edges));
  }

  void dfs(int v) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (EdgeId e : g->incident_edges(v)) {
      const auto [a, b] = g->edge(e);
      const int w = a == v ? b : a;
      if (disc[w] < 0) {
        ++children;
        parent[w] = v;
        stack.push_back(e);
        dfs(w);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent[v] >= 0 || children > 1) is_cut[v] = 1;
          pop_block(e);
        }
      } else if (w != parent[v] && disc[w] < disc[v]) {
        // Upward back edge; descendant copies were handled at the
        // descendant, and the parent edge is the tree edge (simple graph).
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockTree blocks(const Graph& g) {
  if (g.n() == 0) throw ContractError("block decomposition needs n >= 1");
  if (!g.is_connected()) {
    throw StructureError("block decomposition requires a connected graph");
  }
  BlockTree tree;
  DfsState st;
  st.g = &g;
  st.disc.assign(g.n(), -1);
  st.low.assign(g.n(), 0);
  st.parent.assign(g.n(), -1);
  st.is_cut.assign(g.n(), 0);
  st.out = &tree;
  st.dfs(0);
  for (int v = 0; v < g.n(); ++v) {
    if (st.is_cut[v]) tree.cut_vertices.push_back(v);
  }
  tree.incidence.resize(tree.block_count());
  for (int b = 0; b < tree.block_count(); ++b) {
    for (int v : tree.block_vertices[b]) {
      if (tree.is_cut_vertex(v)) tree.incidence[b].push_back(v);
    }
  }
  return tree;
}

}  // namespace md
