#include <random>
#include <set>

#include "doctest.h"
#include "md/blocks.hpp"
#include "md/errors.hpp"
#include "test_util.hpp"

using md::Graph;
namespace tu = md::testutil;

TEST_CASE("two triangles sharing a vertex") {
  const Graph g(5, std::vector<std::pair<int, int>>{
                       {0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const md::BlockTree t = md::blocks(g);
  CHECK(t.block_count() == 2);
  CHECK(t.cut_vertices == std::vector<int>{2});
  CHECK(t.leaf_blocks().size() == 2);
}

TEST_CASE("a cycle is one block") {
  const md::BlockTree t = md::blocks(tu::cycle(6));
  CHECK(t.block_count() == 1);
  CHECK(t.cut_vertices.empty());
  CHECK(t.block_edges[0].size() == 6);
}

TEST_CASE("a path splits into bridges") {
  const md::BlockTree t = md::blocks(tu::path(4));
  CHECK(t.block_count() == 3);
  CHECK(t.cut_vertices == std::vector<int>{1, 2});
  for (const auto& edges : t.block_edges) CHECK(edges.size() == 1);
}

TEST_CASE("disconnected input is refused") {
  CHECK_THROWS_AS(md::blocks(Graph(3, std::vector<std::pair<int, int>>{{0, 1}})),
                  md::StructureError);
}

TEST_CASE("every edge lies in exactly one block") {
  std::mt19937 rng(31);
  for (int t = 0; t < 30; ++t) {
    const Graph g = tu::random_connected_graph(8, 0.35, rng);
    const md::BlockTree tree = md::blocks(g);
    std::vector<int> count(g.m(), 0);
    for (const auto& edges : tree.block_edges) {
      for (md::EdgeId e : edges) ++count[e];
    }
    for (int c : count) CHECK(c == 1);

    // Each block is connected and 2-connected-or-bridge: no internal cut
    // vertex (deleting any single vertex keeps the rest connected).
    for (const auto& verts : tree.block_vertices) {
      if (verts.size() <= 2) continue;
      const md::Subgraph sub = md::induced_subgraph(g, verts);
      for (int drop = 0; drop < sub.graph.n(); ++drop) {
        std::vector<int> keep;
        for (int v = 0; v < sub.graph.n(); ++v) {
          if (v != drop) keep.push_back(v);
        }
        CHECK(md::induced_subgraph(sub.graph, keep).graph.is_connected());
      }
    }
  }
}

TEST_CASE("cut vertices match the brute-force definition") {
  std::mt19937 rng(37);
  for (int t = 0; t < 30; ++t) {
    const Graph g = tu::random_connected_graph(7, 0.35, rng);
    const md::BlockTree tree = md::blocks(g);
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> keep;
      for (int u = 0; u < g.n(); ++u) {
        if (u != v) keep.push_back(u);
      }
      const bool brute =
          !md::induced_subgraph(g, keep).graph.is_connected();
      CHECK(tree.is_cut_vertex(v) == brute);
    }
  }
}
