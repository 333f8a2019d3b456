#pragma once

#include <utility>
#include <vector>

#include "md/graph.hpp"

namespace md {

// Box product: (u,v) ~ (x,y) iff equal in one coordinate and adjacent in
// the other. Vertex (u,v) gets index u*|right|+v; every product edge
// remembers which factor edge it copies.
struct ProductGraph {
  Graph graph;
  std::vector<std::pair<int, int>> vertex_labels;
  // (0, e): copy of left-factor edge e; (1, e): copy of right-factor edge e.
  std::vector<std::pair<int, EdgeId>> edge_origin;
};

ProductGraph cartesian_product(const Graph& left, const Graph& right);

}  // namespace md
