#pragma once

#include <vector>

#include "md/graph.hpp"
#include "md/rational.hpp"

namespace md {

// Vertex connectivity κ: 0 for disconnected graphs and K_1, n-1 for
// complete graphs, otherwise the minimum number of vertices whose removal
// disconnects the graph (unit-capacity max-flow over nonadjacent pairs).
int connectivity(const Graph& g);

// Maximum number of internally disjoint s-t paths (equivalently the
// smallest s-t separator) for nonadjacent s and t.
int local_connectivity(const Graph& g, int s, int t);

struct DistanceSummary {
  std::vector<std::vector<int>> dist;
  int diameter = 0;
  Rational mu;  // mean over unordered pairs
};

// All-pairs BFS; requires a connected graph with n >= 1.
DistanceSummary distance_summary(const Graph& g);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> side;      // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle; // cycle vertices in order otherwise
};
BipartiteResult is_bipartite(const Graph& g);

struct IndependenceResult {
  int alpha = 0;
  std::vector<int> witness;
};
// Exact maximum independent set; ResourceError above the size limit.
IndependenceResult independence_number(const Graph& g, int limit = 20);

struct MatchingCutResult {
  bool found = false;
  std::vector<EdgeId> cut;   // pairwise non-adjacent crossing edges
  std::vector<int> side;     // 0/1 bipartition witnessing the cut
};
// Searches for an edge cut that is a matching; requires a connected graph;
// ResourceError above the size limit.
MatchingCutResult has_matching_cut(const Graph& g, int limit = 16);

// True iff the graph has no K_5 and no K_{3,3} minor, by exhaustive minor
// search; ResourceError above 10 vertices.
bool is_planar_small(const Graph& g);

}  // namespace md
