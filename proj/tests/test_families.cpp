#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "md/enumerate.hpp"
#include "md/errors.hpp"
#include "md/families.hpp"
#include "md/metrics.hpp"
#include "md/solver.hpp"
#include "test_util.hpp"

using md::CertifiedGraph;
using md::FamilySpec;
using md::Graph;
namespace tu = md::testutil;

namespace {

CertifiedGraph gen(const std::string& text) {
  return md::generate(md::parse_family_spec(text));
}

int exact(const Graph& g) { return md::md_exact(g).md; }

bool isomorphic(const Graph& a, const Graph& b) {
  return md::canonical_bits(a) == md::canonical_bits(b);
}

}  // namespace

TEST_CASE("cycle colorings match the exact solver") {
  for (int n = 3; n <= 9; ++n) {
    const CertifiedGraph cg = gen("cycle:" + std::to_string(n));
    CHECK(cg.claimed_md == n / 2);
    CHECK(cg.graph.n() == n);
    CHECK(exact(cg.graph) == cg.claimed_md);
  }
}

TEST_CASE("complete graphs carry a single class") {
  CHECK(gen("complete:1").claimed_md == 0);
  for (int n = 2; n <= 6; ++n) {
    const CertifiedGraph cg = gen("complete:" + std::to_string(n));
    CHECK(cg.claimed_md == 1);
    CHECK(exact(cg.graph) == 1);
  }
}

TEST_CASE("paths and trees are rainbow") {
  const CertifiedGraph p4 = gen("path:4");
  CHECK(p4.claimed_md == 3);
  CHECK(exact(p4.graph) == 3);

  const CertifiedGraph spider = gen("tree:0-1,1-2,1-3,3-4");
  CHECK(spider.claimed_md == 4);
  CHECK(exact(spider.graph) == 4);

  CHECK_THROWS_AS(gen("tree:0-1,2-3"), md::ContractError);
  CHECK_THROWS_AS(gen("tree:0-1,1-2,0-2"), md::ContractError);
}

TEST_CASE("complete bipartite values split by shape") {
  const CertifiedGraph star = gen("biclique:1,4");
  CHECK(star.claimed_md == 4);
  CHECK(exact(star.graph) == 4);

  const CertifiedGraph square = gen("biclique:2,2");
  CHECK(square.claimed_md == 2);
  CHECK(isomorphic(square.graph, tu::cycle(4)));
  CHECK(exact(square.graph) == 2);

  for (const char* text : {"biclique:2,3", "biclique:3,3", "biclique:2,4"}) {
    const CertifiedGraph cg = gen(text);
    CHECK(cg.claimed_md == 1);
    CHECK(exact(cg.graph) == 1);
  }
}

TEST_CASE("a dominating apex collapses the palette") {
  const CertifiedGraph fan = gen("join(path:3)");
  CHECK(fan.claimed_md == 1);
  CHECK(exact(fan.graph) == 1);

  const CertifiedGraph wheel = gen("join(cycle:4)");
  CHECK(wheel.claimed_md == 1);
  CHECK(exact(wheel.graph) == 1);

  const CertifiedGraph edge = gen("join(complete:1)");
  CHECK(edge.claimed_md == 1);
  CHECK(edge.graph.n() == 2);
}

TEST_CASE("products add their factor values") {
  const CertifiedGraph square = gen("product(complete:2,complete:2)");
  CHECK(square.claimed_md == 2);
  CHECK(isomorphic(square.graph, tu::cycle(4)));

  const CertifiedGraph rook = gen("product(complete:3,complete:3)");
  CHECK(rook.claimed_md == 2);
  CHECK(exact(rook.graph) == 2);

  const CertifiedGraph ladder = gen("product(complete:2,path:4)");
  CHECK(ladder.claimed_md == 4);
  CHECK(exact(ladder.graph) == 4);

  const CertifiedGraph sugar = gen("krboxpath:2,3");
  CHECK(isomorphic(sugar.graph, gen("product(complete:2,path:3)").graph));
  CHECK(sugar.claimed_md == 3);

  const CertifiedGraph tall = gen("krboxpath:3,4");
  CHECK(tall.claimed_md == 4);
  CHECK(tall.graph.n() == 12);
}

TEST_CASE("twin-clique graphs sit at two classes") {
  const CertifiedGraph a4 = gen("afamily:4");
  CHECK(a4.claimed_md == 2);
  CHECK(isomorphic(a4.graph, tu::cycle(4)));

  const CertifiedGraph a5 = gen("afamily:5");
  CHECK(a5.claimed_md == 2);
  CHECK(exact(a5.graph) == 2);

  const CertifiedGraph a8 = gen("afamily:8");
  CHECK(a8.claimed_md == 2);
  CHECK(exact(a8.graph) == 2);

  const CertifiedGraph a9 = gen("afamily:9;1-2");
  CHECK(a9.claimed_md == 2);
  CHECK(a9.graph.n() == 9);
  CHECK(a9.graph.m() == gen("afamily:9").graph.m() - 1);

  const CertifiedGraph a5drop = gen("afamily:5;1-2");
  CHECK(isomorphic(a5drop.graph, tu::cycle(5)));

  CHECK_THROWS_AS(gen("afamily:3"), md::ContractError);
  CHECK_THROWS_AS(gen("afamily:8;1-2"), md::ContractError);
  CHECK_THROWS_AS(gen("afamily:9;1-1"), md::ContractError);
  CHECK_THROWS_AS(gen("afamily:9;1-5"), md::ContractError);
  CHECK_THROWS_AS(gen("afamily:9;1-2,2-3"), md::ContractError);
}

TEST_CASE("umbrellas reach half the order") {
  const CertifiedGraph minimal = gen("umbrella:1,1,1;2,2,2");
  CHECK(minimal.graph.n() == 7);
  CHECK(minimal.claimed_md == 3);
  CHECK(exact(minimal.graph) == 3);

  const CertifiedGraph four = gen("umbrella:1,1,1,1;2,2,2,2");
  CHECK(four.graph.n() == 9);
  CHECK(four.claimed_md == 4);
  CHECK(exact(four.graph) == 4);

  const CertifiedGraph long_spoke = gen("umbrella:3,1,1;2,2,2");
  CHECK(long_spoke.graph.n() == 9);
  CHECK(long_spoke.claimed_md == 4);
  CHECK(exact(long_spoke.graph) == 4);

  const CertifiedGraph wide_rim = gen("umbrella:1,1,1;4,2,2");
  CHECK(wide_rim.graph.n() == 9);
  CHECK(wide_rim.claimed_md == 4);
  CHECK(exact(wide_rim.graph) == 4);

  CHECK_THROWS_AS(gen("umbrella:2,1,1;2,2,2"), md::ContractError);
  CHECK_THROWS_AS(gen("umbrella:1,1,1;3,2,2"), md::ContractError);
  CHECK_THROWS_AS(gen("umbrella:1,1;2,2"), md::ContractError);
  CHECK_THROWS_AS(gen("umbrella:1,1,1;2,2"), md::ContractError);
}

TEST_CASE("even three-route graphs reach half the order except the smallest") {
  const CertifiedGraph base = gen("theta:2,2,4");
  CHECK(base.graph.n() == 7);
  CHECK(base.claimed_md == 3);
  CHECK(exact(base.graph) == 3);

  const CertifiedGraph smallest = gen("theta:2,2,2");
  CHECK(smallest.claimed_md == 1);
  CHECK(isomorphic(smallest.graph, tu::complete_bipartite(2, 3)));
  CHECK(exact(smallest.graph) == 1);

  const CertifiedGraph wide = gen("theta:2,4,4");
  CHECK(wide.graph.n() == 9);
  CHECK(wide.claimed_md == 4);
  CHECK(exact(wide.graph) == 4);

  const CertifiedGraph reordered = gen("theta:4,2,4");
  CHECK(reordered.claimed_md == 4);
  CHECK(isomorphic(reordered.graph, wide.graph));

  CHECK_THROWS_AS(gen("theta:2,2,3"), md::ContractError);
  CHECK_THROWS_AS(gen("theta:0,2,2"), md::ContractError);
}

TEST_CASE("odd path bundles") {
  const CertifiedGraph two = gen("multipath:1,1");
  CHECK(two.claimed_md == 3);
  CHECK(isomorphic(two.graph, tu::cycle(6)));

  const CertifiedGraph three = gen("multipath:1,1,1");
  CHECK(three.graph.n() == 8);
  CHECK(three.claimed_md == 4);
  CHECK(exact(three.graph) == 4);
  CHECK(md::distance_summary(three.graph).diameter == 3);

  const CertifiedGraph longer = gen("multipath:2,1,1");
  CHECK(longer.graph.n() == 10);
  CHECK(longer.claimed_md == 5);
  CHECK(exact(longer.graph) == 5);

  CHECK_THROWS_AS(gen("multipath:1"), md::ContractError);
  CHECK_THROWS_AS(gen("multipath:1,0"), md::ContractError);
}

TEST_CASE("path replacement grows the palette by half the added length") {
  const CertifiedGraph c4 = gen("cycle:4");
  const CertifiedGraph c6 = md::path_replace_lift(c4, 0, 3);
  CHECK(c6.claimed_md == 3);
  CHECK(isomorphic(c6.graph, tu::cycle(6)));
  CHECK(exact(c6.graph) == 3);

  const CertifiedGraph same = md::path_replace_lift(c4, 1, 1);
  CHECK(same.graph.m() == c4.graph.m());
  CHECK(same.claimed_md == c4.claimed_md);

  const CertifiedGraph k4 = gen("complete:4");
  const CertifiedGraph sub2 = md::path_replace_lift(k4, 0, 2);
  CHECK(sub2.claimed_md == 1);
  CHECK(exact(sub2.graph) == 1);

  const CertifiedGraph sub5 = md::path_replace_lift(k4, 0, 5);
  CHECK(sub5.claimed_md == 3);
  CHECK(exact(sub5.graph) == 3);

  const CertifiedGraph c8 = md::path_replace_lift(c6, 0, 3);
  CHECK(c8.claimed_md == 4);
  CHECK(isomorphic(c8.graph, tu::cycle(8)));

  CHECK_THROWS_AS(md::path_replace_lift(c4, 9, 3), md::ContractError);
  CHECK_THROWS_AS(md::path_replace_lift(c4, 0, 0), md::ContractError);
}

TEST_CASE("chords require a uniquely separated pair") {
  const CertifiedGraph c4 = gen("cycle:4");
  CHECK_THROWS_AS(md::add_edge_lift(c4, 0, 2), md::ContractError);
  CHECK_THROWS_AS(md::add_edge_lift(c4, 0, 1), md::ContractError);
  CHECK_THROWS_AS(md::add_edge_lift(c4, 0, 0), md::ContractError);

  const CertifiedGraph c5 = gen("cycle:5");
  const CertifiedGraph chord = md::add_edge_lift(c5, 0, 2);
  CHECK(chord.claimed_md == 2);
  CHECK(chord.graph.m() == 6);
  CHECK(exact(chord.graph) == 2);
}

TEST_CASE("the closure adds exactly the uniquely forced chords") {
  const CertifiedGraph c5 = gen("cycle:5");
  const auto verified = md::verify_md(c5.graph, c5.coloring);
  REQUIRE(verified.ok());
  const auto hyper =
      md::build_hypergraph(c5.graph, c5.coloring, *verified.certificate);
  const Graph closed = md::closure_graph(hyper);

  CertifiedGraph grown = c5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (!closed.has_edge(u, v) || c5.graph.has_edge(u, v)) continue;
      grown = md::add_edge_lift(grown, u, v);
    }
  }
  CHECK(isomorphic(grown.graph, closed));
  CHECK(grown.claimed_md == c5.claimed_md);
}

TEST_CASE("family spec parsing rejects malformed text") {
  CHECK_THROWS_AS(md::parse_family_spec("cycle"), md::ParseError);
  CHECK_THROWS_AS(md::parse_family_spec("cycle:x"), md::ParseError);
  CHECK_THROWS_AS(md::parse_family_spec("mystery:3"), md::ParseError);
  CHECK_THROWS_AS(md::parse_family_spec("theta:2,2"), md::ParseError);
  CHECK_THROWS_AS(md::parse_family_spec("cycle:6 extra"), md::ParseError);
  CHECK_THROWS_AS(md::parse_family_spec("product(cycle:3)"), md::ParseError);
  CHECK_THROWS_AS(md::parse_family_spec("product(cycle:3,)"), md::ParseError);
  CHECK_THROWS_AS(md::parse_family_spec(""), md::ParseError);

  try {
    md::parse_family_spec("mystery:3");
    CHECK(false);
  } catch (const md::ParseError& err) {
    CHECK(err.position() == 0);
  }
}

TEST_CASE("nested specs parse through parentheses") {
  const CertifiedGraph nested = gen("product(join(path:2),cycle:4)");
  CHECK(nested.claimed_md == 3);

  const CertifiedGraph mixed = gen("product(theta:2,2,4,path:2)");
  CHECK(mixed.claimed_md == 4);
  CHECK(mixed.graph.n() == 14);
}

TEST_CASE("every generated claim agrees with the exact solver") {
  const std::vector<std::string> specs = {
      "cycle:5",
      "cycle:8",
      "complete:5",
      "path:6",
      "tree:0-1,0-2,2-3,2-4",
      "biclique:2,3",
      "biclique:3,3",
      "join(complete:3)",
      "join(biclique:1,3)",
      "product(complete:2,path:3)",
      "product(complete:2,complete:3)",
      "afamily:6",
      "afamily:7",
      "afamily:9",
      "afamily:9;1-2,3-4",
      "umbrella:1,1,1;2,2,2",
      "theta:2,2,4",
      "theta:2,2,2",
      "multipath:1,1",
      "multipath:1,1,1",
  };
  for (const auto& text : specs) {
    CAPTURE(text);
    const CertifiedGraph cg = gen(text);
    CHECK(exact(cg.graph) == cg.claimed_md);
  }
}
