#include <algorithm>

#include "doctest.h"
#include "md/errors.hpp"
#include "md/graph.hpp"
#include "test_util.hpp"

using md::EdgeId;
using md::Graph;

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(Graph(2, std::vector<std::pair<int, int>>{{0, 0}}),
                  md::ContractError);
  CHECK_THROWS_AS(Graph(2, std::vector<std::pair<int, int>>{{0, 2}}),
                  md::ContractError);
  CHECK_THROWS_AS(Graph(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}),
                  md::ContractError);
  CHECK_THROWS_AS(Graph(-1, std::vector<std::pair<int, int>>{}),
                  md::ContractError);
}

TEST_CASE("edge ids follow insertion order") {
  const Graph g(4, std::vector<std::pair<int, int>>{{2, 3}, {0, 1}, {1, 3}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.edge(0) == std::pair<int, int>{2, 3});
  CHECK(g.edge(1) == std::pair<int, int>{0, 1});
  CHECK(g.edge(2) == std::pair<int, int>{1, 3});
  CHECK(g.edge_id(3, 1) == EdgeId{2});
  CHECK(g.edge_id(0, 3) == std::nullopt);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("adjacency is consistent with the edge list") {
  const Graph g = md::testutil::petersen();
  for (int v = 0; v < g.n(); ++v) {
    CHECK(g.degree(v) == 3);
    for (int w : g.neighbors(v)) CHECK(g.has_edge(v, w));
    CHECK(g.incident_edges(v).size() == 3);
    for (EdgeId e : g.incident_edges(v)) {
      const auto [a, b] = g.edge(e);
      CHECK((a == v || b == v));
    }
  }
}

TEST_CASE("connectivity queries") {
  CHECK(md::testutil::cycle(5).is_connected());
  CHECK_FALSE(Graph(2, std::vector<std::pair<int, int>>{}).is_connected());
  CHECK(Graph(1, std::vector<std::pair<int, int>>{}).is_connected());

  const Graph two_parts(5, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {3, 4}});
  const auto labels = two_parts.component_labels();
  CHECK(labels[0] == labels[1]);
  CHECK(labels[2] == labels[3]);
  CHECK(labels[3] == labels[4]);
  CHECK(labels[0] != labels[2]);
}

TEST_CASE("component labels with masked edges") {
  const Graph g = md::testutil::cycle(4);
  std::vector<char> removed(4, 0);
  removed[0] = 1;  // cut one edge: still connected
  auto labels = g.component_labels_without(removed);
  CHECK(std::count(labels.begin(), labels.end(), labels[0]) == 4);
  removed[2] = 1;  // opposite edge too: splits into two pairs
  labels = g.component_labels_without(removed);
  CHECK(labels[1] == labels[2]);
  CHECK(labels[0] == labels[3]);
  CHECK(labels[0] != labels[1]);
}

TEST_CASE("bfs distances") {
  const Graph g = md::testutil::path(4);
  const auto d = g.bfs_distances(0);
  CHECK(d == std::vector<int>{0, 1, 2, 3});
  const Graph split(3, std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(split.bfs_distances(0)[2] == -1);
}

TEST_CASE("induced subgraph maps back to the parent") {
  const Graph g = md::testutil::complete(5);
  const std::vector<int> keep = {1, 3, 4};
  const md::Subgraph s = md::induced_subgraph(g, keep);
  CHECK(s.graph.n() == 3);
  CHECK(s.graph.m() == 3);
  CHECK(s.vertex_to_parent == keep);
  for (EdgeId e = 0; e < s.graph.m(); ++e) {
    const auto [a, b] = s.graph.edge(e);
    const auto parent = g.edge(s.edge_to_parent[e]);
    CHECK(std::minmax(s.vertex_to_parent[a], s.vertex_to_parent[b]) ==
          std::minmax(parent.first, parent.second));
  }
}

TEST_CASE("edge subgraph keeps chosen edges only") {
  const Graph g = md::testutil::cycle(5);
  const std::vector<EdgeId> keep = {0, 2};
  const md::Subgraph s = md::edge_subgraph(g, keep);
  CHECK(s.graph.m() == 2);
  CHECK(s.graph.n() == 4);  // four endpoints
  CHECK(s.edge_to_parent == keep);
}
