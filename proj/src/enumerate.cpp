#include "md/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "md/errors.hpp"

namespace md {

namespace {

inline int pair_bit(int u, int v, int n) {
  // Row-major upper triangle: (0,1), (0,2), ..., (0,n-1), (1,2), ...
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace

std::uint64_t canonical_bits(const Graph& g) {
  const int n = g.n();
  if (n > 11) {
    throw ContractError("permutation canonical form capped at 11 vertices");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t bits = 0;
    for (const auto& [u, v] : g.edges()) {
      bits |= std::uint64_t{1} << pair_bit(perm[u], perm[v], n);
    }
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> enumerate_nonisomorphic(
    int n, const std::function<bool(const Graph&)>& filter) {
  if (n < 0) throw ContractError("negative vertex count");
  if (n > 6) {
    throw ContractError(
        "internal enumeration capped at 6 vertices; ingest larger orders "
        "from graph6 files");
  }
  const int pairs = n * (n - 1) / 2;

  // Permutation tables over pair-bit positions.
  std::vector<std::vector<int>> tables;
  {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> table(pairs);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          table[pair_bit(u, v, n)] = pair_bit(perm[u], perm[v], n);
        }
      }
      tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<Graph> out;
  std::set<std::uint32_t> seen;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    std::uint32_t best = mask;
    for (const std::vector<int>& table : tables) {
      std::uint32_t image = 0;
      for (int b = 0; b < pairs; ++b) {
        if (mask >> b & 1) image |= std::uint32_t{1} << table[b];
      }
      best = std::min(best, image);
    }
    if (best != mask) continue;  // not the class representative
    if (!seen.insert(mask).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (mask >> pair_bit(u, v, n) & 1) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (!filter || filter(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace md
