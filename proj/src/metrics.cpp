#include "md/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>

#include "md/errors.hpp"

namespace md {

int local_connectivity(const Graph& g, int s, int t) {
  if (s == t) throw ContractError("local connectivity needs distinct vertices");
  if (g.has_edge(s, t)) {
    throw ContractError("local connectivity is defined for nonadjacent pairs");
  }
  const int n = g.n();
  const int nodes = 2 * n;  // vertex x splits into in = 2x, out = 2x+1
  const int big = n + 1;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int x = 0; x < n; ++x) cap[2 * x][2 * x + 1] = 1;
  for (const auto& [x, y] : g.edges()) {
    cap[2 * x + 1][2 * y] = big;
    cap[2 * y + 1][2 * x] = big;
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> prev(nodes, -1);
    prev[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev[sink] < 0) {
      const int v = q.front();
      q.pop();
      for (int w = 0; w < nodes; ++w) {
        if (prev[w] < 0 && cap[v][w] > 0) {
          prev[w] = v;
          q.push(w);
        }
      }
    }
    if (prev[sink] < 0) break;
    int aug = std::numeric_limits<int>::max();
    for (int v = sink; v != source; v = prev[v]) {
      aug = std::min(aug, cap[prev[v]][v]);
    }
    for (int v = sink; v != source; v = prev[v]) {
      cap[prev[v]][v] -= aug;
      cap[v][prev[v]] += aug;
    }
    flow += aug;
  }
  return flow;
}

int connectivity(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  if (g.m() == n * (n - 1) / 2) return n - 1;

  int v0 = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(v0)) v0 = v;
  }
  // A minimum separator either avoids v0 (then it separates v0 from some
  // non-neighbor) or contains it (then it separates two of its neighbors).
  int best = n;
  for (int u = 0; u < n; ++u) {
    if (u != v0 && !g.has_edge(v0, u)) {
      best = std::min(best, local_connectivity(g, v0, u));
    }
  }
  const std::vector<int>& nb = g.neighbors(v0);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (!g.has_edge(nb[i], nb[j])) {
        best = std::min(best, local_connectivity(g, nb[i], nb[j]));
      }
    }
  }
  return best;
}

DistanceSummary distance_summary(const Graph& g) {
  if (g.n() == 0) throw ContractError("distance summary needs n >= 1");
  if (!g.is_connected()) {
    throw StructureError("distance summary requires a connected graph");
  }
  DistanceSummary s;
  s.dist.reserve(g.n());
  long long total = 0;
  for (int v = 0; v < g.n(); ++v) {
    s.dist.push_back(g.bfs_distances(v));
    for (int u = v + 1; u < g.n(); ++u) {
      total += s.dist.back()[u];
      s.diameter = std::max(s.diameter, s.dist.back()[u]);
    }
  }
  const long long pairs = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
  s.mu = pairs == 0 ? Rational{} : Rational::make(total, pairs);
  return s;
}

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.n();
  BipartiteResult r;
  r.side.assign(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (r.side[root] >= 0) continue;
    r.side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (r.side[w] < 0) {
          r.side[w] = 1 - r.side[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
          continue;
        }
        if (r.side[w] != r.side[v]) continue;
        // Odd cycle: v..lca..w plus the edge wv.
        int a = v, b = w;
        std::vector<int> up_a, up_b;
        while (depth[a] > depth[b]) up_a.push_back(a), a = parent[a];
        while (depth[b] > depth[a]) up_b.push_back(b), b = parent[b];
        while (a != b) {
          up_a.push_back(a), a = parent[a];
          up_b.push_back(b), b = parent[b];
        }
        up_a.push_back(a);  // the meeting vertex
        r.odd_cycle = std::move(up_a);
        r.odd_cycle.insert(r.odd_cycle.end(), up_b.rbegin(), up_b.rend());
        r.bipartite = false;
        r.side.clear();
        return r;
      }
    }
  }
  r.bipartite = true;
  return r;
}

namespace {

struct MisContext {
  std::vector<std::uint64_t> closed;  // N[v] as a bitmask
  int best = -1;
  std::vector<int> best_set;
  std::vector<int> current;
};

void mis_search(MisContext& ctx, std::uint64_t mask) {
  if (static_cast<int>(ctx.current.size()) + std::popcount(mask) <=
      ctx.best) {
    return;
  }
  if (mask == 0) {
    ctx.best = static_cast<int>(ctx.current.size());
    ctx.best_set = ctx.current;
    return;
  }
  // Some maximum set meets N[v] for any v; branch on a minimum-degree one.
  int pick = -1, pick_deg = std::numeric_limits<int>::max();
  for (std::uint64_t rest = mask; rest;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    const int deg = std::popcount(ctx.closed[v] & mask) - 1;
    if (deg < pick_deg) pick = v, pick_deg = deg;
  }
  for (std::uint64_t cands = ctx.closed[pick] & mask; cands;) {
    const int u = std::countr_zero(cands);
    cands &= cands - 1;
    ctx.current.push_back(u);
    mis_search(ctx, mask & ~ctx.closed[u]);
    ctx.current.pop_back();
  }
}

}  // namespace

IndependenceResult independence_number(const Graph& g, int limit) {
  const int n = g.n();
  if (n > limit || n > 63) {
    throw ResourceError("independence search capped at " +
                        std::to_string(std::min(limit, 63)) + " vertices");
  }
  MisContext ctx;
  ctx.closed.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    ctx.closed[v] = std::uint64_t{1} << v;
    for (int w : g.neighbors(v)) ctx.closed[v] |= std::uint64_t{1} << w;
  }
  mis_search(ctx, n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  std::sort(ctx.best_set.begin(), ctx.best_set.end());
  return {ctx.best, std::move(ctx.best_set)};
}

namespace {

struct CutContext {
  const Graph* g = nullptr;
  std::vector<int> side;
  std::vector<int> cross;  // opposite-side assigned neighbors so far
  bool done = false;
};

void cut_search(CutContext& ctx, int v) {
  const Graph& g = *ctx.g;
  if (ctx.done) return;
  if (v == g.n()) {
    ctx.done =
        std::count(ctx.side.begin(), ctx.side.end(), 1) > 0;  // both sides
    return;
  }
  for (int s = 0; s < 2 && !ctx.done; ++s) {
    int partner = -1;
    bool feasible = true;
    for (int w : g.neighbors(v)) {
      if (w >= v || ctx.side[w] == s) continue;
      if (partner >= 0 || ctx.cross[w] > 0) {
        feasible = false;
        break;
      }
      partner = w;
    }
    if (!feasible) continue;
    ctx.side[v] = s;
    if (partner >= 0) {
      ctx.cross[v] = 1;
      ctx.cross[partner] += 1;
    }
    cut_search(ctx, v + 1);
    if (!ctx.done) {
      if (partner >= 0) {
        ctx.cross[v] = 0;
        ctx.cross[partner] -= 1;
      }
      ctx.side[v] = -1;
    }
  }
}

}  // namespace

MatchingCutResult has_matching_cut(const Graph& g, int limit) {
  if (!g.is_connected()) {
    throw StructureError("matching-cut search requires a connected graph");
  }
  if (g.n() > limit) {
    throw ResourceError("matching-cut search capped at " +
                        std::to_string(limit) + " vertices");
  }
  MatchingCutResult r;
  if (g.n() < 2) return r;
  CutContext ctx;
  ctx.g = &g;
  ctx.side.assign(g.n(), -1);
  ctx.cross.assign(g.n(), 0);
  ctx.side[0] = 0;
  cut_search(ctx, 1);
  if (!ctx.done) return r;
  r.found = true;
  r.side = ctx.side;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& [u, w] = g.edges()[e];
    if (ctx.side[u] != ctx.side[w]) r.cut.push_back(e);
  }
  return r;
}

namespace {

// Dense adjacency rows; vertex i's neighbors as bits.
using Rows = std::vector<std::uint16_t>;

Rows compact(const Rows& adj, std::uint16_t alive) {
  std::vector<int> map(adj.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (alive >> v & 1) map[v] = next++;
  }
  Rows out(next, 0);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (map[v] < 0) continue;
    for (std::size_t w = 0; w < adj.size(); ++w) {
      if (map[w] >= 0 && (adj[v] >> w & 1)) {
        out[map[v]] |= std::uint16_t(1) << map[w];
      }
    }
  }
  return out;
}

// Delete degree-<=1 vertices and suppress degree-2 vertices; neither can
// carry a minimum-degree-3 minor.
Rows simplify(Rows adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::uint16_t alive = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      alive |= std::uint16_t(1) << v;
    }
    for (std::size_t v = 0; v < adj.size(); ++v) {
      const int deg = std::popcount(adj[v]);
      if (deg <= 1) {
        if (deg == 1) {
          const int w = std::countr_zero(adj[v]);
          adj[w] &= ~(std::uint16_t(1) << v);
        }
        adj[v] = 0;
        alive &= ~(std::uint16_t(1) << v);
        changed = true;
        break;
      }
      if (deg == 2) {
        const int a = std::countr_zero(adj[v]);
        const int b =
            std::countr_zero(static_cast<std::uint16_t>(adj[v] & (adj[v] - 1)));
        adj[a] &= ~(std::uint16_t(1) << v);
        adj[b] &= ~(std::uint16_t(1) << v);
        adj[a] |= std::uint16_t(1) << b;
        adj[b] |= std::uint16_t(1) << a;
        adj[v] = 0;
        alive &= ~(std::uint16_t(1) << v);
        changed = true;
        break;
      }
    }
    if (changed) adj = compact(adj, alive);
  }
  return adj;
}

int edge_count(const Rows& adj) {
  int twice = 0;
  for (std::uint16_t row : adj) twice += std::popcount(row);
  return twice / 2;
}

bool has_k5_subgraph(const Rows& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> bool {
    if (pick.size() == 5) return true;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : pick) {
        if (!(adj[u] >> v & 1)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick.push_back(v);
      if (self(self, v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

bool has_k33_subgraph(const Rows& adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 6) return false;
  // A triple with three common neighbors is one side of a K_{3,3}; the
  // common neighbors cannot include the triple (no self-adjacency bits).
  for (int a0 = 0; a0 < n; ++a0) {
    for (int a1 = a0 + 1; a1 < n; ++a1) {
      for (int a2 = a1 + 1; a2 < n; ++a2) {
        const std::uint16_t common = adj[a0] & adj[a1] & adj[a2];
        if (std::popcount(common) >= 3) return true;
      }
    }
  }
  return false;
}

struct MinorContext {
  std::map<Rows, bool> memo;
};

bool forbidden_minor(MinorContext& ctx, Rows adj) {
  adj = simplify(std::move(adj));
  const int n = static_cast<int>(adj.size());
  const int m = edge_count(adj);
  if (n < 5 || m < 9) return false;
  if (m > 3 * n - 6) return true;  // edge count already forces one
  if (has_k5_subgraph(adj) || (n >= 6 && has_k33_subgraph(adj))) return true;
  auto it = ctx.memo.find(adj);
  if (it != ctx.memo.end()) return it->second;
  bool found = false;
  for (int u = 0; u < n && !found; ++u) {
    for (int v = u + 1; v < n && !found; ++v) {
      if (!(adj[u] >> v & 1)) continue;
      Rows next = adj;
      next[u] |= next[v];
      next[v] = 0;
      for (std::size_t w = 0; w < next.size(); ++w) {
        if (next[w] >> v & 1) {
          next[w] &= ~(std::uint16_t(1) << v);
          if (w != static_cast<std::size_t>(u)) {
            next[w] |= std::uint16_t(1) << u;
            next[u] |= std::uint16_t(1) << w;
          }
        }
      }
      next[u] &= ~(std::uint16_t(1) << u);
      next[u] &= ~(std::uint16_t(1) << v);
      std::uint16_t alive = 0;
      for (int w = 0; w < n; ++w) {
        if (w != v) alive |= std::uint16_t(1) << w;
      }
      found = forbidden_minor(ctx, compact(next, alive));
    }
  }
  ctx.memo.emplace(std::move(adj), found);
  return found;
}

}  // namespace

bool is_planar_small(const Graph& g) {
  if (g.n() > 10) {
    throw ResourceError("planarity search capped at 10 vertices");
  }
  Rows adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint16_t(1) << v;
    adj[v] |= std::uint16_t(1) << u;
  }
  MinorContext ctx;
  return !forbidden_minor(ctx, std::move(adj));
}

}  // namespace md
