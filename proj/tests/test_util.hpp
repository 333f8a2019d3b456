#pragma once

#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "md/graph.hpp"

namespace md::testutil {

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

inline Graph complete_bipartite(int s, int t) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
  }
  return Graph(s + t, e);
}

// Vertices 0..4 outer C_5, 5..9 inner pentagram, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return Graph(10, e);
}

// Erdős–Rényi draw conditioned on nothing; deterministic seed per call site.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution flip(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (flip(rng)) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

inline Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  for (int tries = 0; tries < 10000; ++tries) {
    Graph g = random_graph(n, p, rng);
    if (g.is_connected()) return g;
  }
  // Fall back to a spanning path plus random extras.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

}  // namespace md::testutil
