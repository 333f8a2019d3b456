#pragma once

#include <vector>

#include "md/coloring.hpp"
#include "md/graph.hpp"

namespace md {

// Union-find partition of edge ids into candidate color classes.
class EdgePartition {
 public:
  explicit EdgePartition(int m);

  int size() const { return static_cast<int>(parent_.size()); }
  EdgeId find(EdgeId e) const;
  // Union the classes of a and b; true when they were distinct.
  bool merge(EdgeId a, EdgeId b);
  int class_count() const { return classes_; }
  // Classes ordered by least member edge id, members ascending.
  std::vector<std::vector<EdgeId>> classes() const;

 private:
  mutable std::vector<EdgeId> parent_;
  int classes_ = 0;
};

// Merges every accepted coloring must contain: triangles are one class and
// opposite edges of every 4-cycle share one; closed transitively.
EdgePartition forced_partition(const Graph& g);

// Per-block upper bound, summed: 1 per bridge; for a 2-connected block the
// least of ⌊order/2⌋, the independence number, 2 when the diameter is at
// most 2, and 1 when complete.
int md_upper_bound(const Graph& g);

struct SolveConfig {
  long long node_budget = 10'000'000;  // per 2-connected block
};

struct SolveStats {
  long long nodes = 0;
  long long forced_merges = 0;
  double wall_ms = 0;
};

struct SolveResult {
  int md = 0;
  EdgeColoring witness;  // verified, |palette| = md
  SolveStats stats;
};

// Exact maximum palette size over verified colorings, with a verified
// witness. Blocks are solved independently (their values add) by searching
// coarsenings of the forced partition, target class count descending from
// the upper bound; the witness is the lexicographically least feasible
// assignment in restricted-growth form at the winning count.
// ResourceError (with a bounds interval) when a block exhausts the budget.
SolveResult md_exact(const Graph& g, const SolveConfig& config = {});

// Constructive lower bound: 0 for a single vertex, 2 when a matching-cut
// exists on a small connected graph (the two-class cut coloring is built
// and verified), else 1.
int md_lower_probe(const Graph& g);

}  // namespace md
