#include "doctest.h"
#include "md/errors.hpp"
#include "md/io.hpp"
#include "test_util.hpp"

using md::Graph;

TEST_CASE("edge list parsing") {
  const Graph tri = md::parse_edge_list("n 3\n0 1\n1 2\n0 2\n");
  CHECK(tri.n() == 3);
  CHECK(tri.m() == 3);

  const Graph empty2 = md::parse_edge_list("# nothing here\nn 2\n");
  CHECK(empty2.n() == 2);
  CHECK(empty2.m() == 0);

  const Graph commented =
      md::parse_edge_list("# leading\nn 4  # trailing\n\n0 1\n2 3 # pair\n");
  CHECK(commented.m() == 2);
}

TEST_CASE("edge list rejects bad input with line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      md::parse_edge_list(text);
    } catch (const md::ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(line_of("n 2\n0 0\n") == 2);
  CHECK(line_of("n 2\n0 2\n") == 2);
  CHECK(line_of("n 3\n0 1\n# x\n1 0\n") == 4);
  CHECK(line_of("0 1\n") == 1);           // missing header
  CHECK(line_of("n 2\nzero 1\n") == 2);   // not an integer
  CHECK(line_of("") == 1);                // empty document
}

TEST_CASE("emit is sorted and round trips") {
  const Graph g(4, std::vector<std::pair<int, int>>{{3, 2}, {1, 0}, {0, 2}});
  CHECK(md::emit_edge_list(g) == "n 4\n0 1\n0 2\n2 3\n");
  const Graph back = md::parse_edge_list(md::emit_edge_list(g));
  CHECK(back.m() == g.m());
  for (const auto& [u, v] : g.edges()) CHECK(back.has_edge(u, v));
}

TEST_CASE("colored document round trip") {
  const Graph g = md::testutil::cycle(4);
  md::EdgeColoring c;
  c.colors = {1, 2, 1, 2};
  const std::string doc = md::emit_colored_graph(g, c);
  const md::ColoredGraph back = md::parse_colored_graph(doc);
  CHECK(back.graph.m() == 4);
  CHECK(back.coloring.colors == c.colors);
}

TEST_CASE("colored document validation") {
  CHECK_THROWS_AS(md::parse_colored_graph("n 2\n0 1\ne 0 1\ne 0 2\n"),
                  md::ParseError);  // edge colored twice
  CHECK_THROWS_AS(md::parse_colored_graph("n 2\n0 1\n"), md::ParseError);
  CHECK_THROWS_AS(md::parse_colored_graph("n 2\n0 1\ne 1 1\n"),
                  md::ParseError);  // unknown edge index
  CHECK_THROWS_AS(md::parse_colored_graph("n 2\n0 1\ne 0 0\n"),
                  md::ParseError);  // colors are positive
  CHECK_THROWS_AS(md::parse_colored_graph("n 3\n0 1\ne 0 1\n1 2\n"),
                  md::ParseError);  // edge line after colors
}
