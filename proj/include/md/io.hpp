#pragma once

#include <string>

#include "md/coloring.hpp"
#include "md/graph.hpp"

namespace md {

// Text format: optional "#" comment / blank lines; first data line
// "n <count>"; then one "u v" line per edge (0-based endpoints).
Graph parse_edge_list(const std::string& text);

// Deterministic listing: "n <count>" then edges sorted by (u, v).
std::string emit_edge_list(const Graph& g);

// Coloring lines "e <edge-index> <color>" appended after an edge-list
// block. parse_colored_graph accepts a combined document; the coloring
// must assign every edge exactly once.
struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};
ColoredGraph parse_colored_graph(const std::string& text);
std::string emit_colored_graph(const Graph& g, const EdgeColoring& c);

}  // namespace md
