#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "md/coloring.hpp"
#include "md/enumerate.hpp"
#include "md/errors.hpp"
#include "md/product.hpp"
#include "md/solver.hpp"
#include "test_util.hpp"

using md::EdgeColoring;
using md::Graph;
namespace tu = md::testutil;

namespace {

// Ground truth for m <= 8: maximum verified class count over every edge
// partition, enumerated as restricted-growth strings.
int naive_md(const Graph& g) {
  REQUIRE(g.m() <= 8);
  int best = 0;
  std::vector<int> a(g.m());
  auto rec = [&](auto&& self, int i, int gmax) -> void {
    if (i == g.m()) {
      if (gmax <= best) return;  // cannot improve
      EdgeColoring c;
      c.colors = a;
      if (md::verify_md(g, c).ok()) best = gmax;
      return;
    }
    for (int label = 1; label <= gmax + 1; ++label) {
      a[i] = label;
      self(self, i + 1, std::max(gmax, label));
    }
  };
  rec(rec, 0, 0);
  return best;
}

int solved(const Graph& g) { return md::md_exact(g).md; }

}  // namespace

TEST_CASE("forced classes on the small standards") {
  CHECK(md::forced_partition(tu::complete(4)).class_count() == 1);
  CHECK(md::forced_partition(tu::cycle(4)).class_count() == 2);
  CHECK(md::forced_partition(tu::cycle(5)).class_count() == 5);
  // Two triangles hanging on a shared edge collapse entirely.
  const Graph diamond(4, std::vector<std::pair<int, int>>{
                             {0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(md::forced_partition(diamond).class_count() == 1);
}

TEST_CASE("forced classes via independent union-find oracle") {
  std::mt19937 rng(47);
  for (int t = 0; t < 20; ++t) {
    const Graph g = tu::random_graph(7, 0.5, rng);
    const md::EdgePartition p = md::forced_partition(g);
    // Oracle: repeat raw scans until stable, tracking pair merges directly.
    std::vector<int> cls(g.m());
    std::iota(cls.begin(), cls.end(), 0);
    bool changed = true;
    auto join = [&](md::EdgeId a, md::EdgeId b) {
      const int from = cls[a], to = cls[b];
      if (from == to) return;
      for (int& c : cls) {
        if (c == from) c = to;
      }
      changed = true;
    };
    while (changed) {
      changed = false;
      for (int x = 0; x < g.n(); ++x) {
        for (int y = x + 1; y < g.n(); ++y) {
          for (int z = y + 1; z < g.n(); ++z) {
            const auto xy = g.edge_id(x, y), xz = g.edge_id(x, z),
                       yz = g.edge_id(y, z);
            if (xy && xz && yz) {
              join(*xy, *xz);
              join(*xy, *yz);
            }
          }
        }
      }
      for (int x = 0; x < g.n(); ++x) {
        for (int y = 0; y < g.n(); ++y) {
          for (int z = 0; z < g.n(); ++z) {
            for (int w = 0; w < g.n(); ++w) {
              std::set<int> quad{x, y, z, w};
              if (quad.size() != 4) continue;
              const auto xy = g.edge_id(x, y), yz = g.edge_id(y, z),
                         zw = g.edge_id(z, w), wx = g.edge_id(w, x);
              if (xy && yz && zw && wx) {
                join(*xy, *zw);
                join(*yz, *wx);
              }
            }
          }
        }
      }
    }
    std::set<int> distinct(cls.begin(), cls.end());
    CHECK(p.class_count() == static_cast<int>(distinct.size()));
    for (md::EdgeId a = 0; a < g.m(); ++a) {
      for (md::EdgeId b = a + 1; b < g.m(); ++b) {
        CHECK((p.find(a) == p.find(b)) == (cls[a] == cls[b]));
      }
    }
  }
}

TEST_CASE("upper bounds on the spec standards") {
  CHECK(md::md_upper_bound(tu::cycle(7)) == 3);
  CHECK(md::md_upper_bound(tu::complete(5)) == 1);
  const Graph two_triangles(5, std::vector<std::pair<int, int>>{
                                   {0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(md::md_upper_bound(two_triangles) == 2);
  CHECK(md::md_upper_bound(tu::path(5)) == 4);
}

TEST_CASE("cycles reach half their order") {
  for (int n = 3; n <= 9; ++n) {
    const auto r = md::md_exact(tu::cycle(n));
    CHECK(r.md == n / 2);
    CHECK(md::verify_md(tu::cycle(n), r.witness).ok());
  }
}

TEST_CASE("complete graphs collapse to one color") {
  for (int n = 2; n <= 6; ++n) CHECK(solved(tu::complete(n)) == 1);
}

TEST_CASE("trees use one color per edge") {
  CHECK(solved(tu::path(5)) == 4);
  const Graph star(5, std::vector<std::pair<int, int>>{
                          {0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(solved(star) == 4);
  const Graph broom(6, std::vector<std::pair<int, int>>{
                           {0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
  CHECK(solved(broom) == 5);
}

TEST_CASE("bipartite and product standards") {
  CHECK(solved(tu::complete_bipartite(2, 3)) == 1);
  const md::ProductGraph prism =
      md::cartesian_product(tu::complete(2), tu::complete(3));
  CHECK(solved(prism.graph) == 2);
}

TEST_CASE("single vertex and single edge") {
  CHECK(solved(Graph(1, std::vector<std::pair<int, int>>{})) == 0);
  CHECK(solved(tu::complete(2)) == 1);
}

TEST_CASE("witness invariants hold on every solve") {
  std::mt19937 rng(53);
  for (int t = 0; t < 25; ++t) {
    const Graph g = tu::random_connected_graph(7, 0.4, rng);
    const auto r = md::md_exact(g);
    CHECK(md::verify_md(g, r.witness).ok());
    CHECK(static_cast<int>(r.witness.palette().size()) == r.md);
    CHECK(r.md <= md::md_upper_bound(g));
    CHECK(r.md >= md::md_lower_probe(g));
  }
}

TEST_CASE("solver agrees with the naive partition oracle") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : md::enumerate_nonisomorphic(
             n, [](const Graph& h) { return h.is_connected(); })) {
      if (g.m() > 8) continue;
      CHECK(solved(g) == naive_md(g));
    }
  }
  int checked = 0;
  for (const Graph& g : md::enumerate_nonisomorphic(
           6, [](const Graph& h) { return h.is_connected() && h.m() <= 8; })) {
    CHECK(solved(g) == naive_md(g));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("edge deletion cannot lower the value") {
  // Spanning-subgraph monotonicity, one deletion at a time; transitivity
  // extends it to every connected spanning subgraph.
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : md::enumerate_nonisomorphic(
             n, [](const Graph& h) { return h.is_connected(); })) {
      const int base = solved(g);
      for (md::EdgeId e = 0; e < g.m(); ++e) {
        std::vector<std::pair<int, int>> edges;
        for (md::EdgeId f = 0; f < g.m(); ++f) {
          if (f != e) edges.push_back(g.edge(f));
        }
        const Graph h(g.n(), edges);
        if (!h.is_connected()) continue;
        CHECK(solved(h) >= base);
      }
    }
  }
}

TEST_CASE("deleting a non-cut internal vertex cannot lower the value") {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : md::enumerate_nonisomorphic(
             n, [](const Graph& h) { return h.is_connected(); })) {
      const int base = solved(g);
      for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) <= 1) continue;  // pendent
        std::vector<int> keep;
        for (int u = 0; u < g.n(); ++u) {
          if (u != v) keep.push_back(u);
        }
        const md::Subgraph sub = md::induced_subgraph(g, keep);
        if (!sub.graph.is_connected()) continue;  // cut vertex
        CHECK(solved(sub.graph) >= base);
      }
    }
  }
}

TEST_CASE("joining an apex collapses to one color") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : md::enumerate_nonisomorphic(
             n, [](const Graph& h) { return h.is_connected(); })) {
      std::vector<std::pair<int, int>> edges = g.edges();
      for (int v = 0; v < g.n(); ++v) edges.emplace_back(v, g.n());
      CHECK(solved(Graph(g.n() + 1, edges)) == 1);
    }
  }
}

TEST_CASE("product values add") {
  std::vector<Graph> factors;
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : md::enumerate_nonisomorphic(
             n, [](const Graph& h) { return h.is_connected(); })) {
      factors.push_back(g);
    }
  }
  for (const Graph& a : factors) {
    for (const Graph& b : factors) {
      const auto p = md::cartesian_product(a, b);
      CHECK(solved(p.graph) == solved(a) + solved(b));
    }
  }
}

TEST_CASE("gluing along a shared monochromatic edge adds values minus one") {
  // Two squares sharing an edge; two triangles sharing an edge; a hexagon
  // and a square sharing an edge.
  const Graph ladder(6, std::vector<std::pair<int, int>>{
                            {0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(solved(ladder) == 2 + 2 - 1);
  const Graph diamond(4, std::vector<std::pair<int, int>>{
                             {0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(solved(diamond) == 1 + 1 - 1);
  const Graph hex_square(8, std::vector<std::pair<int, int>>{
                                {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                {0, 6}, {6, 7}, {7, 1}});
  CHECK(solved(hex_square) == 3 + 2 - 1);
}

TEST_CASE("lower probe") {
  CHECK(md::md_lower_probe(tu::complete(4)) == 1);
  CHECK(md::md_lower_probe(tu::cycle(6)) == 2);
  CHECK(md::md_lower_probe(tu::path(3)) == 2);
  CHECK(md::md_lower_probe(tu::complete(2)) == 1);
  CHECK(md::md_lower_probe(Graph(1, std::vector<std::pair<int, int>>{})) == 0);
}

TEST_CASE("budget exhaustion raises a bounded error") {
  md::SolveConfig config;
  config.node_budget = 3;
  try {
    md::md_exact(tu::cycle(9), config);
    CHECK(false);
  } catch (const md::ResourceError& e) {
    CHECK(e.lower_bound() >= 1);
    CHECK(e.upper_bound() <= 4);
    CHECK(e.upper_bound() >= 1);
  }
}

TEST_CASE("block decomposition drives the solve") {
  const Graph two_triangles(5, std::vector<std::pair<int, int>>{
                                   {0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(solved(two_triangles) == 2);
  // Triangle with a pendant path: 1 + two bridges.
  const Graph tadpole(5, std::vector<std::pair<int, int>>{
                             {0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  CHECK(solved(tadpole) == 3);
}

TEST_CASE("solves are deterministic") {
  std::mt19937 rng(59);
  for (int t = 0; t < 10; ++t) {
    const Graph g = tu::random_connected_graph(7, 0.45, rng);
    const auto a = md::md_exact(g);
    const auto b = md::md_exact(g);
    CHECK(a.md == b.md);
    CHECK(a.witness.colors == b.witness.colors);
  }
}

TEST_CASE("disconnected input is refused") {
  CHECK_THROWS_AS(md::md_exact(Graph(3, std::vector<std::pair<int, int>>{{0, 1}})),
                  md::StructureError);
  CHECK_THROWS_AS(md::md_upper_bound(Graph(2, std::vector<std::pair<int, int>>{})),
                  md::StructureError);
}
