#include <random>

#include "doctest.h"
#include "md/enumerate.hpp"
#include "md/errors.hpp"
#include "test_util.hpp"

using md::Graph;

TEST_CASE("class counts match the catalog") {
  // All graphs: 1, 2, 4, 11, 34, 156 for n = 1..6.
  CHECK(md::enumerate_nonisomorphic(1).size() == 1);
  CHECK(md::enumerate_nonisomorphic(2).size() == 2);
  CHECK(md::enumerate_nonisomorphic(3).size() == 4);
  CHECK(md::enumerate_nonisomorphic(4).size() == 11);
  CHECK(md::enumerate_nonisomorphic(5).size() == 34);
  CHECK(md::enumerate_nonisomorphic(6).size() == 156);
}

TEST_CASE("connected class counts match the catalog") {
  auto connected = [](const Graph& g) { return g.is_connected(); };
  CHECK(md::enumerate_nonisomorphic(1, connected).size() == 1);
  CHECK(md::enumerate_nonisomorphic(2, connected).size() == 1);
  CHECK(md::enumerate_nonisomorphic(3, connected).size() == 2);
  CHECK(md::enumerate_nonisomorphic(4, connected).size() == 6);
  CHECK(md::enumerate_nonisomorphic(5, connected).size() == 21);
  CHECK(md::enumerate_nonisomorphic(6, connected).size() == 112);
}

TEST_CASE("representatives are pairwise nonisomorphic") {
  const auto graphs = md::enumerate_nonisomorphic(5);
  std::vector<std::uint64_t> keys;
  for (const Graph& g : graphs) keys.push_back(md::canonical_bits(g));
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("canonical bits are isomorphism invariant") {
  std::mt19937 rng(7);
  const Graph g = md::testutil::random_graph(6, 0.5, rng);
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> relabeled;
  for (const auto& [u, v] : g.edges()) {
    relabeled.emplace_back(perm[u], perm[v]);
  }
  CHECK(md::canonical_bits(g) == md::canonical_bits(Graph(6, relabeled)));
}

TEST_CASE("enumeration beyond the cap is refused") {
  CHECK_THROWS_AS(md::enumerate_nonisomorphic(7), md::ContractError);
}
