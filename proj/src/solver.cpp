#include "md/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "md/blocks.hpp"
#include "md/errors.hpp"
#include "md/metrics.hpp"

namespace md {

EdgePartition::EdgePartition(int m) : parent_(m), classes_(m) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

EdgeId EdgePartition::find(EdgeId e) const {
  while (parent_[e] != e) e = parent_[e] = parent_[parent_[e]];
  return e;
}

bool EdgePartition::merge(EdgeId a, EdgeId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);  // keep the least id as representative
  parent_[b] = a;
  --classes_;
  return true;
}

std::vector<std::vector<EdgeId>> EdgePartition::classes() const {
  std::map<EdgeId, std::vector<EdgeId>> by_root;
  for (EdgeId e = 0; e < size(); ++e) by_root[find(e)].push_back(e);
  std::vector<std::vector<EdgeId>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

EdgePartition forced_partition(const Graph& g) {
  EdgePartition p(g.m());
  // Triangles collapse to one class.
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      const auto ab = g.edge_id(a, b);
      if (!ab) continue;
      for (int c = b + 1; c < g.n(); ++c) {
        const auto ac = g.edge_id(a, c);
        const auto bc = g.edge_id(b, c);
        if (!ac || !bc) continue;
        p.merge(*ab, *ac);
        p.merge(*ab, *bc);
      }
    }
  }
  // Opposite edges of every 4-cycle pair up (cycle a-b-x-d via diagonal
  // {a,x}, a least).
  for (int a = 0; a < g.n(); ++a) {
    for (int x = a + 1; x < g.n(); ++x) {
      std::vector<int> common;
      for (int w : g.neighbors(a)) {
        if (w != x && w > a && g.has_edge(w, x)) common.push_back(w);
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const int b = common[i], d = common[j];
          p.merge(*g.edge_id(a, b), *g.edge_id(x, d));
          p.merge(*g.edge_id(b, x), *g.edge_id(d, a));
        }
      }
    }
  }
  return p;
}

namespace {

int block_upper_bound(const Graph& b) {
  // b is one 2-connected block (order >= 3).
  const int n = b.n();
  int bound = n / 2;
  if (b.m() == n * (n - 1) / 2) return 1;
  if (distance_summary(b).diameter <= 2) bound = std::min(bound, 2);
  if (n <= 20) bound = std::min(bound, independence_number(b).alpha);
  return bound;
}

}  // namespace

int md_upper_bound(const Graph& g) {
  if (g.n() == 0) throw ContractError("bound needs n >= 1");
  if (!g.is_connected()) {
    throw StructureError("bound requires a connected graph");
  }
  int total = 0;
  const BlockTree tree = blocks(g);
  for (int i = 0; i < tree.block_count(); ++i) {
    if (tree.block_edges[i].size() == 1) {
      total += 1;
      continue;
    }
    total += block_upper_bound(
        edge_subgraph(g, tree.block_edges[i]).graph);
  }
  return total;
}

namespace {

struct BlockSearch {
  const Graph& graph;
  std::vector<std::vector<EdgeId>> classes;
  int target = 0;
  long long budget = 0;
  long long nodes = 0;
  std::vector<int> assign;        // restricted-growth label per class
  std::vector<char> edge_label;   // per edge: 0 = unassigned, else label

  explicit BlockSearch(const Graph& g, std::vector<std::vector<EdgeId>> cls)
      : graph(g), classes(std::move(cls)) {
    assign.assign(classes.size(), 0);
    edge_label.assign(graph.m(), 0);
  }

  void paint(std::size_t cls, int label) {
    assign[cls] = label;
    for (EdgeId e : classes[cls]) edge_label[e] = static_cast<char>(label);
  }

  // A partial assignment is dead when some vertex pair cannot be separated
  // even if all unassigned edges joined any single class.
  bool feasible(int gmax) const {
    const int n = graph.n();
    std::vector<std::vector<int>> labels;
    std::vector<char> removed(graph.m(), 0);
    const int cuts = gmax < target ? gmax + 1 : gmax;
    for (int c = 1; c <= cuts; ++c) {
      // Cut c <= gmax: class c plus every unassigned edge. Cut gmax+1
      // stands for any class still to be opened: unassigned edges alone.
      for (EdgeId e = 0; e < graph.m(); ++e) {
        removed[e] = edge_label[e] == 0 ||
                     (c <= gmax && edge_label[e] == c);
      }
      labels.push_back(graph.component_labels_without(removed));
    }
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool separable = false;
        for (const auto& lab : labels) {
          if (lab[u] != lab[v]) {
            separable = true;
            break;
          }
        }
        if (!separable) return false;
      }
    }
    return true;
  }

  bool search(std::size_t i, int gmax) {
    if (++nodes > budget) {
      throw ResourceError("search budget exhausted", 1, target);
    }
    if (!feasible(gmax)) return false;
    if (i == classes.size()) return gmax == target;
    if (gmax + static_cast<int>(classes.size() - i) < target) return false;
    const int top = std::min(gmax + 1, target);
    for (int label = 1; label <= top; ++label) {
      paint(i, label);
      if (search(i + 1, std::max(gmax, label))) return true;
      paint(i, 0);
    }
    return false;
  }
};

struct BlockResult {
  int md = 0;
  std::vector<int> colors;  // per block edge, labels 1..md
  long long nodes = 0;
  long long merges = 0;
};

BlockResult solve_block(const Graph& b, long long budget) {
  EdgePartition forced = forced_partition(b);
  BlockResult result;
  result.merges = b.m() - forced.class_count();
  const int ub = std::min(block_upper_bound(b), forced.class_count());
  BlockSearch search(b, forced.classes());
  search.budget = budget;
  for (int t = ub; t >= 1; --t) {
    search.target = t;
    std::fill(search.assign.begin(), search.assign.end(), 0);
    std::fill(search.edge_label.begin(), search.edge_label.end(), 0);
    bool found = false;
    try {
      found = search.search(0, 0);
    } catch (const ResourceError&) {
      throw ResourceError("block budget exhausted between color counts", 1,
                          t);
    }
    if (found) {
      result.md = t;
      result.colors.assign(search.edge_label.begin(),
                           search.edge_label.end());
      result.nodes = search.nodes;
      return result;
    }
  }
  throw InvariantError("no feasible coloring found down to one class");
}

}  // namespace

SolveResult md_exact(const Graph& g, const SolveConfig& config) {
  if (g.n() == 0) throw ContractError("solver needs n >= 1");
  if (!g.is_connected()) {
    throw StructureError("solver requires a connected graph");
  }
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  result.witness.colors.assign(g.m(), 0);
  const BlockTree tree = blocks(g);
  int palette_base = 0;
  for (int i = 0; i < tree.block_count(); ++i) {
    const auto& edge_ids = tree.block_edges[i];
    if (edge_ids.size() == 1) {
      result.witness.colors[edge_ids[0]] = ++palette_base;
      result.md += 1;
      continue;
    }
    const Subgraph sub = edge_subgraph(g, edge_ids);
    const BlockResult block = solve_block(sub.graph, config.node_budget);
    for (EdgeId e = 0; e < sub.graph.m(); ++e) {
      result.witness.colors[sub.edge_to_parent[e]] =
          palette_base + block.colors[e];
    }
    palette_base += block.md;
    result.md += block.md;
    result.stats.nodes += block.nodes;
    result.stats.forced_merges += block.merges;
  }
  if (g.m() > 0 && !verify_md(g, result.witness).ok()) {
    throw InvariantError("combined block witness failed verification");
  }
  if (static_cast<int>(result.witness.palette().size()) != result.md) {
    throw InvariantError("witness palette size disagrees with the value");
  }
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

int md_lower_probe(const Graph& g) {
  if (g.n() <= 1) return 0;
  if (!g.is_connected() || g.n() > 16) return 1;
  const MatchingCutResult cut = has_matching_cut(g);
  if (!cut.found || static_cast<int>(cut.cut.size()) == g.m()) return 1;
  EdgeColoring c;
  c.colors.assign(g.m(), 1);
  for (EdgeId e : cut.cut) c.colors[e] = 2;
  if (!verify_md(g, c).ok()) {
    throw InvariantError("matching-cut coloring failed verification");
  }
  return 2;
}

}  // namespace md
