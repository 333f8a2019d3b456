#pragma once

#include <string>

#include "md/graph.hpp"

namespace md {

// Decode one graph from graph6 text (short form, n <= 62). Trailing
// whitespace and an optional ">>graph6<<" prefix are tolerated.
Graph parse_graph6(const std::string& text);

// Encode as a single graph6 line without trailing newline.
std::string encode_graph6(const Graph& g);

}  // namespace md
