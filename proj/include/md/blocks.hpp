#pragma once

#include <vector>

#include "md/graph.hpp"

namespace md {

// Block/cut-vertex decomposition of a connected graph. Every edge lies in
// exactly one block; a block is a maximal 2-connected subgraph or a bridge.
struct BlockTree {
  std::vector<std::vector<int>> block_vertices;
  std::vector<std::vector<EdgeId>> block_edges;
  std::vector<int> cut_vertices;  // sorted
  // incidence[b] = cut vertices lying in block b.
  std::vector<std::vector<int>> incidence;

  int block_count() const { return static_cast<int>(block_edges.size()); }
  bool is_cut_vertex(int v) const;
  // Blocks touching at most one cut vertex.
  std::vector<int> leaf_blocks() const;
};

// Requires a connected graph with at least one vertex.
BlockTree blocks(const Graph& g);

}  // namespace md
