#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "md/graph.hpp"

namespace md {

// Upper-triangle adjacency bits minimized over all vertex permutations;
// equal values iff isomorphic. Exposed for tests; cost O(n! · n²).
std::uint64_t canonical_bits(const Graph& g);

// One representative per isomorphism class on n labeled vertices that
// satisfies the filter (empty filter = accept all). Internal enumeration
// only up to n = 6; larger orders must be read from graph6 files.
std::vector<Graph> enumerate_nonisomorphic(
    int n, const std::function<bool(const Graph&)>& filter = {});

}  // namespace md
