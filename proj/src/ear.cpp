#include "md/ear.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "md/errors.hpp"
#include "md/metrics.hpp"

namespace md {

namespace {

std::vector<std::pair<int, int>> path_edge_pairs(const std::vector<int>& seq) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    out.emplace_back(seq[i], seq[i + 1]);
  }
  return out;
}

std::vector<std::pair<int, int>> cycle_edge_pairs(const std::vector<int>& seq) {
  std::vector<std::pair<int, int>> out = path_edge_pairs(seq);
  out.emplace_back(seq.back(), seq.front());
  return out;
}

EdgeId edge_id_checked(const Graph& g, int u, int v, const char* where) {
  auto id = g.edge_id(u, v);
  if (!id) {
    throw InvariantError(std::string(where) + ": missing edge " +
                         std::to_string(u) + "-" + std::to_string(v));
  }
  return *id;
}

EdgeId least_cycle_edge(const Graph& g, const std::vector<int>& cycle) {
  EdgeId best = -1;
  for (auto [u, v] : cycle_edge_pairs(cycle)) {
    EdgeId e = edge_id_checked(g, u, v, "cycle edge scan");
    if (best < 0 || e < best) best = e;
  }
  return best;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

int index_of(const std::vector<int>& seq, int x) {
  auto it = std::find(seq.begin(), seq.end(), x);
  if (it == seq.end()) return -1;
  return static_cast<int>(it - seq.begin());
}

// Subpath of the path `seq` between vertices a and b, oriented a..b.
std::optional<std::vector<int>> subpath(const std::vector<int>& seq, int a,
                                        int b) {
  int pa = index_of(seq, a);
  int pb = index_of(seq, b);
  if (pa < 0 || pb < 0 || pa == pb) return std::nullopt;
  std::vector<int> out;
  if (pa < pb) {
    out.assign(seq.begin() + pa, seq.begin() + pb + 1);
  } else {
    out.assign(seq.begin() + pb, seq.begin() + pa + 1);
    std::reverse(out.begin(), out.end());
  }
  return out;
}

}  // namespace

std::vector<int> EarDecomposition::base_vertices() const {
  std::vector<int> out;
  if (auto* c = std::get_if<OddCycleBase>(&base)) {
    out = c->vertices;
  } else if (auto* c = std::get_if<EvenCycleBase>(&base)) {
    out = c->vertices;
  } else if (auto* u = std::get_if<UmbrellaBase>(&base)) {
    out.push_back(u->apex);
    for (const auto& s : u->spokes) out.insert(out.end(), s.begin(), s.end());
    for (const auto& r : u->rims) out.insert(out.end(), r.begin(), r.end());
  } else if (auto* t = std::get_if<ThetaBase>(&base)) {
    for (const auto& r : t->routes) out.insert(out.end(), r.begin(), r.end());
  }
  return sorted_unique(std::move(out));
}

std::vector<std::pair<int, int>> EarDecomposition::base_edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  if (auto* c = std::get_if<OddCycleBase>(&base)) {
    out = cycle_edge_pairs(c->vertices);
  } else if (auto* c = std::get_if<EvenCycleBase>(&base)) {
    out = cycle_edge_pairs(c->vertices);
  } else if (auto* u = std::get_if<UmbrellaBase>(&base)) {
    for (const auto& s : u->spokes) {
      auto part = path_edge_pairs(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    for (const auto& r : u->rims) {
      auto part = path_edge_pairs(r);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else if (auto* t = std::get_if<ThetaBase>(&base)) {
    for (const auto& r : t->routes) {
      auto part = path_edge_pairs(r);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

std::vector<int> EarDecomposition::piece_vertices(int idx) const {
  if (idx == 0) return base_vertices();
  return ears[idx - 1].vertices;
}

std::vector<int> EarDecomposition::piece_internals(int idx) const {
  if (idx == 0) return base_vertices();
  const auto& seq = ears[idx - 1].vertices;
  return std::vector<int>(seq.begin() + 1, seq.end() - 1);
}

bool EarDecomposition::ear_on_base(int idx) const {
  auto bv = base_vertices();
  const Ear& e = ears[idx - 1];
  return contains(bv, e.a()) && contains(bv, e.b());
}

void validate_decomposition(const Graph& g, const EarDecomposition& d) {
  std::vector<char> known(g.n(), 0);
  std::vector<char> used(g.m(), 0);
  auto claim_edge = [&](int u, int v, const char* where) {
    EdgeId e = edge_id_checked(g, u, v, where);
    if (used[e]) {
      throw InvariantError(std::string(where) + ": edge " + std::to_string(u) +
                           "-" + std::to_string(v) + " claimed twice");
    }
    used[e] = 1;
  };

  if (auto* c = std::get_if<OddCycleBase>(&d.base)) {
    if (c->vertices.size() < 3 || c->vertices.size() % 2 == 0) {
      throw InvariantError("base cycle must be odd with at least 3 vertices");
    }
  } else if (auto* c = std::get_if<EvenCycleBase>(&d.base)) {
    if (c->vertices.size() < 4 || c->vertices.size() % 2 == 1) {
      throw InvariantError("base cycle must be even with at least 4 vertices");
    }
    if (c->fixed_edge != least_cycle_edge(g, c->vertices)) {
      throw InvariantError("base anchor must be the least cycle edge id");
    }
  } else if (auto* u = std::get_if<UmbrellaBase>(&d.base)) {
    int k = static_cast<int>(u->spokes.size());
    if (k < 3 || static_cast<int>(u->rims.size()) != k) {
      throw InvariantError(
          "umbrella base needs equally many spokes and rims, at least 3");
    }
    for (int i = 0; i < k; ++i) {
      if (u->spokes[i].size() < 2 || u->rims[i].size() < 2) {
        throw InvariantError("umbrella pieces need at least one edge each");
      }
      if (u->spokes[i].front() != u->apex) {
        throw InvariantError("every spoke must start at the apex");
      }
      if (u->rims[i].front() != u->spokes[i].back() ||
          u->rims[i].back() != u->spokes[(i + 1) % k].back()) {
        throw InvariantError("rim ends must meet consecutive spoke tips");
      }
    }
    std::set<int> seen{u->apex};
    for (const auto& s : u->spokes) {
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (!seen.insert(s[i]).second) {
          throw InvariantError("umbrella vertices must not repeat");
        }
      }
    }
    for (const auto& r : u->rims) {
      for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (!seen.insert(r[i]).second) {
          throw InvariantError("umbrella vertices must not repeat");
        }
      }
    }
  } else if (auto* t = std::get_if<ThetaBase>(&d.base)) {
    if (t->routes.size() != 3) {
      throw InvariantError("three-route base needs exactly three routes");
    }
    int a = t->routes[0].front();
    int b = t->routes[0].back();
    if (a == b) throw InvariantError("route ends must be distinct");
    std::set<int> seen{a, b};
    for (const auto& r : t->routes) {
      if (r.size() < 2 || r.front() != a || r.back() != b) {
        throw InvariantError("routes must share both end vertices");
      }
      for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (!seen.insert(r[i]).second) {
          throw InvariantError("route interiors must not repeat");
        }
      }
    }
  }

  for (int v : d.base_vertices()) {
    if (v < 0 || v >= g.n()) {
      throw InvariantError("base vertex out of range");
    }
    known[v] = 1;
  }
  for (auto [u, v] : d.base_edge_pairs()) claim_edge(u, v, "base edge");

  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const Ear& ear = d.ears[i];
    if (ear.size() < 1) throw InvariantError("empty ear");
    if (ear.a() == ear.b()) {
      throw InvariantError("ear ends must be distinct");
    }
    if (!known[ear.a()] || !known[ear.b()]) {
      throw InvariantError("ear ends must lie on earlier pieces");
    }
    for (std::size_t j = 1; j + 1 < ear.vertices.size(); ++j) {
      int v = ear.vertices[j];
      if (v < 0 || v >= g.n() || known[v]) {
        throw InvariantError("ear interior vertices must be new");
      }
      known[v] = 1;
    }
    for (auto [u, v] : path_edge_pairs(ear.vertices)) {
      claim_edge(u, v, "ear edge");
    }
  }

  for (int v = 0; v < g.n(); ++v) {
    if (!known[v]) throw InvariantError("decomposition misses a vertex");
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!used[e]) throw InvariantError("decomposition misses an edge");
  }
}

namespace {

// Grows ears over the marked base deterministically: scan attachment
// vertices in id order, walk fresh vertices breadth-first until another
// marked vertex (distinct from the attachment) is reached.
EarDecomposition attach_ears(const Graph& g, BaseShape base) {
  EarDecomposition d{std::move(base), {}};
  std::vector<char> known(g.n(), 0);
  std::vector<char> used(g.m(), 0);
  int left = g.m();
  for (int v : d.base_vertices()) known[v] = 1;
  for (auto [u, v] : d.base_edge_pairs()) {
    used[edge_id_checked(g, u, v, "base edge")] = 1;
    --left;
  }
  while (left > 0) {
    bool grown = false;
    for (int u = 0; u < g.n() && !grown; ++u) {
      if (!known[u]) continue;
      for (EdgeId e : g.incident_edges(u)) {
        if (used[e]) continue;
        auto [x, y] = g.edge(e);
        int w = x == u ? y : x;
        std::vector<int> seq{u, w};
        if (!known[w]) {
          // Breadth-first through fresh vertices to any marked vertex
          // other than u (one exists: u is not a cut vertex).
          std::vector<int> prev(g.n(), -1);
          std::queue<int> q;
          q.push(w);
          prev[w] = w;
          int hit = -1;
          while (!q.empty() && hit < 0) {
            int c = q.front();
            q.pop();
            for (int nb : g.neighbors(c)) {
              if (c == w && nb == u) continue;
              if (prev[nb] >= 0) continue;
              if (known[nb]) {
                if (nb == u) continue;
                prev[nb] = c;
                hit = nb;
                break;
              }
              prev[nb] = c;
              q.push(nb);
            }
          }
          if (hit < 0) {
            throw InvariantError("ear walk trapped; graph not 2-connected");
          }
          seq.clear();
          for (int c = hit; c != w; c = prev[c]) seq.push_back(c);
          seq.push_back(w);
          seq.push_back(u);
          std::reverse(seq.begin(), seq.end());
        }
        for (std::size_t i = 1; i + 1 < seq.size(); ++i) known[seq[i]] = 1;
        for (auto [a, b] : path_edge_pairs(seq)) {
          used[edge_id_checked(g, a, b, "ear edge")] = 1;
          --left;
        }
        d.ears.push_back(Ear{std::move(seq)});
        grown = true;
        break;
      }
    }
    if (!grown) {
      throw InvariantError("unreachable edges; graph not connected");
    }
  }
  validate_decomposition(g, d);
  return d;
}

std::vector<int> find_cycle(const Graph& g) {
  std::vector<int> parent(g.n(), -2);
  std::vector<char> on_path(g.n(), 0);
  std::vector<std::size_t> next(g.n(), 0);
  std::vector<int> path{0};
  parent[0] = -1;
  on_path[0] = 1;
  while (!path.empty()) {
    int v = path.back();
    if (next[v] < g.neighbors(v).size()) {
      int w = g.neighbors(v)[next[v]++];
      if (w == parent[v]) continue;
      if (on_path[w]) {
        auto it = std::find(path.begin(), path.end(), w);
        return std::vector<int>(it, path.end());
      }
      if (parent[w] == -2) {
        parent[w] = v;
        on_path[w] = 1;
        path.push_back(w);
      }
    } else {
      on_path[v] = 0;
      path.pop_back();
    }
  }
  throw InvariantError("no cycle found; graph is a tree");
}

// Maximum system of paths from `source` to the target set, pairwise
// disjoint outside the source, each stopping at its first target vertex.
// Unit vertex capacities via node splitting; only flagged edges are used.
std::vector<std::vector<int>> disjoint_paths(const Graph& g, int source,
                                             const std::vector<char>& target,
                                             const std::vector<char>& edge_ok,
                                             int want, int target_cap = 1) {
  struct Arc {
    int to;
    int cap;
    int init;
    int rev;
  };
  int n = g.n();
  int sink = 2 * n;
  std::vector<std::vector<Arc>> net(2 * n + 1);
  auto add = [&](int from, int to, int cap) {
    net[from].push_back({to, cap, cap, static_cast<int>(net[to].size())});
    net[to].push_back({from, 0, 0, static_cast<int>(net[from].size()) - 1});
  };
  for (int v = 0; v < n; ++v) {
    if (target[v]) {
      add(2 * v, sink, target_cap);  // terminal: no pass-through
    } else {
      add(2 * v, 2 * v + 1, v == source ? n : 1);
    }
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!edge_ok[e]) continue;
    auto [u, v] = g.edge(e);
    add(2 * u + 1, 2 * v, 1);
    add(2 * v + 1, 2 * u, 1);
  }

  int start = 2 * source + 1;
  int flow = 0;
  while (want < 0 || flow < want) {
    std::vector<std::pair<int, int>> via(2 * n + 1, {-1, -1});
    std::queue<int> q;
    q.push(start);
    via[start] = {start, -1};
    while (!q.empty() && via[sink].first < 0) {
      int c = q.front();
      q.pop();
      for (std::size_t i = 0; i < net[c].size(); ++i) {
        const Arc& a = net[c][i];
        if (a.cap <= 0 || via[a.to].first >= 0) continue;
        via[a.to] = {c, static_cast<int>(i)};
        if (a.to == sink) break;
        q.push(a.to);
      }
    }
    if (via[sink].first < 0) break;
    for (int c = sink; c != start;) {
      auto [p, ai] = via[c];
      net[p][ai].cap -= 1;
      net[net[p][ai].to][net[p][ai].rev].cap += 1;
      c = p;
    }
    ++flow;
  }

  std::vector<std::vector<int>> paths;
  for (int it = 0; it < flow; ++it) {
    std::vector<int> path{source};
    int v = source;
    while (true) {
      Arc* hop = nullptr;
      for (Arc& a : net[2 * v + 1]) {
        if (a.init > 0 && a.cap < a.init) {
          hop = &a;
          break;
        }
      }
      if (!hop) throw InvariantError("flow walk lost its trail");
      hop->cap += 1;
      int w = hop->to / 2;
      path.push_back(w);
      for (Arc& a : net[2 * w]) {
        if (a.init > 0 && a.cap < a.init) {
          a.cap += 1;
          break;
        }
      }
      if (target[w]) break;
      v = w;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

EarDecomposition ear_decompose_from(const Graph& g,
                                    std::span<const int> cycle) {
  std::vector<int> seq(cycle.begin(), cycle.end());
  if (seq.size() < 3) throw ContractError("base cycle needs 3 or more vertices");
  BaseShape base;
  if (seq.size() % 2 == 1) {
    base = OddCycleBase{std::move(seq)};
  } else {
    EdgeId fixed = least_cycle_edge(g, seq);
    base = EvenCycleBase{std::move(seq), fixed};
  }
  return attach_ears(g, std::move(base));
}

namespace {

// Three-route base for odd-order bipartite graphs: grow from any cycle,
// take the first even ear, and route its two ends disjointly through the
// earlier pieces.
EarDecomposition odd_bipartite_base(const Graph& g) {
  EarDecomposition seed = ear_decompose_from(g, find_cycle(g));
  int pick = -1;
  for (std::size_t i = 0; i < seed.ears.size(); ++i) {
    if (seed.ears[i].size() % 2 == 0) {
      pick = static_cast<int>(i);
      break;
    }
  }
  if (pick < 0) {
    throw InvariantError(
        "odd-order bipartite graph grew no even ear; parity is off");
  }
  std::vector<char> edge_ok(g.m(), 0);
  for (auto [u, v] : seed.base_edge_pairs()) {
    edge_ok[edge_id_checked(g, u, v, "prefix edge")] = 1;
  }
  for (int i = 0; i < pick; ++i) {
    for (auto [u, v] : path_edge_pairs(seed.ears[i].vertices)) {
      edge_ok[edge_id_checked(g, u, v, "prefix edge")] = 1;
    }
  }
  const Ear& even_ear = seed.ears[pick];
  std::vector<char> target(g.n(), 0);
  target[even_ear.b()] = 1;
  auto routes = disjoint_paths(g, even_ear.a(), target, edge_ok, 2, 2);
  if (routes.size() < 2) {
    throw InvariantError("prefix pieces admit no disjoint route pair");
  }
  ThetaBase theta{{routes[0], routes[1], even_ear.vertices}};
  return attach_ears(g, BaseShape{std::move(theta)});
}

// Umbrella base grown around an interior vertex of one route when an ear
// connects the interiors of two different routes.
EarDecomposition umbrella_base(const Graph& g, const ThetaBase& tb,
                               int apex) {
  int skip = -1;
  for (int i = 0; i < 3; ++i) {
    if (index_of(tb.routes[i], apex) > 0 &&
        apex != tb.routes[i].back()) {
      skip = i;
      break;
    }
  }
  if (skip < 0) throw InvariantError("umbrella apex must be route-interior");
  int p = (skip + 1) % 3;
  int q = (skip + 2) % 3;
  // Cycle through the two kept routes: forward along p, back along q.
  std::vector<int> ring = tb.routes[p];
  for (std::size_t i = tb.routes[q].size() - 1; i-- > 1;) {
    ring.push_back(tb.routes[q][i]);
  }
  std::vector<char> target(g.n(), 0);
  for (int v : ring) target[v] = 1;
  std::vector<char> edge_ok(g.m(), 1);
  auto spokes = disjoint_paths(g, apex, target, edge_ok, -1);
  if (spokes.size() < 3) {
    throw InvariantError("apex reaches the ring fewer than three ways");
  }
  std::vector<int> order(spokes.size());
  for (std::size_t i = 0; i < spokes.size(); ++i) {
    order[i] = static_cast<int>(i);
  }
  std::vector<int> pos(spokes.size());
  for (std::size_t i = 0; i < spokes.size(); ++i) {
    pos[i] = index_of(ring, spokes[i].back());
    if (pos[i] < 0) throw InvariantError("spoke tip left the ring");
  }
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return pos[x] < pos[y]; });
  UmbrellaBase ub;
  ub.apex = apex;
  int k = static_cast<int>(spokes.size());
  int ring_len = static_cast<int>(ring.size());
  for (int i = 0; i < k; ++i) {
    ub.spokes.push_back(spokes[order[i]]);
    int from = pos[order[i]];
    int to = pos[order[(i + 1) % k]];
    std::vector<int> rim;
    for (int at = from;; at = (at + 1) % ring_len) {
      rim.push_back(ring[at]);
      if (at == to && rim.size() > 1) break;
    }
    ub.rims.push_back(std::move(rim));
  }
  return attach_ears(g, BaseShape{std::move(ub)});
}

}  // namespace

EarDecomposition normalize(const Graph& g) {
  if (g.n() < 3 || connectivity(g) < 2) {
    throw StructureError(
        "ear analysis requires a 2-connected graph on 3 or more vertices");
  }
  bool odd = g.n() % 2 == 1;
  auto bip = is_bipartite(g);
  if (!odd) return ear_decompose_from(g, find_cycle(g));
  if (!bip.bipartite) return ear_decompose_from(g, bip.odd_cycle);

  EarDecomposition d = odd_bipartite_base(g);
  const auto* tb = std::get_if<ThetaBase>(&d.base);
  if (!tb) return d;
  for (std::size_t j = 1; j <= d.ears.size(); ++j) {
    int idx = static_cast<int>(j);
    if (!d.ear_on_base(idx)) continue;
    const Ear& ear = d.ears[j - 1];
    bool housed = false;
    for (const auto& r : tb->routes) {
      if (index_of(r, ear.a()) >= 0 && index_of(r, ear.b()) >= 0) {
        housed = true;
        break;
      }
    }
    if (housed) continue;
    // Ends sit inside two different routes: rebuild around one of them.
    auto route_interior = [&](int v) {
      for (const auto& r : tb->routes) {
        int at = index_of(r, v);
        if (at > 0 && at + 1 < static_cast<int>(r.size())) return true;
      }
      return false;
    };
    int apex = route_interior(ear.a()) ? ear.a() : ear.b();
    return umbrella_base(g, *tb, apex);
  }
  return d;
}

FPath f_path(const Graph& g, const EarDecomposition& d, int i, int j) {
  int t = static_cast<int>(d.ears.size());
  if (i < 0 || j <= i || j > t) {
    throw ContractError("piece indices must satisfy 0 <= i < j <= t");
  }
  const Ear& earj = d.ears[j - 1];
  int a = earj.a();
  int b = earj.b();
  FPath out;
  if (i > 0) {
    auto sub = subpath(d.ears[i - 1].vertices, a, b);
    if (!sub) return out;
    out.defined = true;
    out.vertices = std::move(*sub);
    return out;
  }
  if (!d.ear_on_base(j)) return out;
  if (auto* c = std::get_if<OddCycleBase>(&d.base)) {
    const auto& seq = c->vertices;
    int L = static_cast<int>(seq.size());
    int pa = index_of(seq, a);
    int pb = index_of(seq, b);
    std::vector<int> forward;  // a..b with the cycle's orientation
    for (int at = pa;; at = (at + 1) % L) {
      forward.push_back(seq[at]);
      if (at == pb) break;
    }
    if (forward.size() % 2 == 0) {  // odd many edges
      out.vertices = std::move(forward);
    } else {
      for (int at = pa;; at = (at + L - 1) % L) {
        out.vertices.push_back(seq[at]);
        if (at == pb) break;
      }
    }
    out.defined = true;
    return out;
  }
  if (auto* c = std::get_if<EvenCycleBase>(&d.base)) {
    const auto& seq = c->vertices;
    int L = static_cast<int>(seq.size());
    int pa = index_of(seq, a);
    int pb = index_of(seq, b);
    auto arc_holds_anchor = [&](const std::vector<int>& arc) {
      for (auto [u, v] : path_edge_pairs(arc)) {
        if (edge_id_checked(g, u, v, "arc scan") == c->fixed_edge) return true;
      }
      return false;
    };
    std::vector<int> forward;
    for (int at = pa;; at = (at + 1) % L) {
      forward.push_back(seq[at]);
      if (at == pb) break;
    }
    if (arc_holds_anchor(forward)) {
      out.vertices = std::move(forward);
    } else {
      for (int at = pa;; at = (at + L - 1) % L) {
        out.vertices.push_back(seq[at]);
        if (at == pb) break;
      }
    }
    out.defined = true;
    return out;
  }
  if (auto* u = std::get_if<UmbrellaBase>(&d.base)) {
    for (const auto& s : u->spokes) {
      if (auto sub = subpath(s, a, b)) {
        out.defined = true;
        out.vertices = std::move(*sub);
        return out;
      }
    }
    for (const auto& r : u->rims) {
      if (auto sub = subpath(r, a, b)) {
        out.defined = true;
        out.vertices = std::move(*sub);
        return out;
      }
    }
    return out;
  }
  if (auto* th = std::get_if<ThetaBase>(&d.base)) {
    for (const auto& r : th->routes) {
      if (auto sub = subpath(r, a, b)) {
        out.defined = true;
        out.vertices = std::move(*sub);
        return out;
      }
    }
    return out;
  }
  return out;
}

CheckResult check_standard(const Graph& g, const EarDecomposition& d) {
  CheckResult res;
  auto flag = [&](std::string what, std::vector<int> pieces) {
    res.pass = false;
    res.issues.push_back({std::move(what), std::move(pieces)});
  };
  bool odd = g.n() % 2 == 1;
  auto bip = is_bipartite(g);
  int t = static_cast<int>(d.ears.size());

  if (!odd) {
    if (!std::holds_alternative<EvenCycleBase>(d.base)) {
      flag("even order requires an even base cycle", {0});
    }
    return res;
  }
  if (!bip.bipartite) {
    auto* c = std::get_if<OddCycleBase>(&d.base);
    if (!c) {
      flag("odd nonbipartite order requires an odd base cycle", {0});
      return res;
    }
    // Complement arcs of base-attached ears must pairwise share a vertex.
    const auto& seq = c->vertices;
    int L = static_cast<int>(seq.size());
    std::vector<std::pair<int, std::vector<int>>> arcs;
    for (int j = 1; j <= t; ++j) {
      if (!d.ear_on_base(j)) continue;
      int pa = index_of(seq, d.ears[j - 1].a());
      int pb = index_of(seq, d.ears[j - 1].b());
      std::vector<int> forward;
      for (int at = pa;; at = (at + 1) % L) {
        forward.push_back(seq[at]);
        if (at == pb) break;
      }
      if (forward.size() % 2 == 0) {  // forward arc is odd; complement is even
        std::vector<int> even;
        for (int at = pa;; at = (at + L - 1) % L) {
          even.push_back(seq[at]);
          if (at == pb) break;
        }
        arcs.emplace_back(j, sorted_unique(std::move(even)));
      } else {
        arcs.emplace_back(j, sorted_unique(std::move(forward)));
      }
    }
    for (std::size_t x = 0; x < arcs.size(); ++x) {
      for (std::size_t y = x + 1; y < arcs.size(); ++y) {
        bool meet = false;
        for (int v : arcs[x].second) {
          if (contains(arcs[y].second, v)) {
            meet = true;
            break;
          }
        }
        if (!meet) {
          flag("even complement arcs of two attached pieces are disjoint",
               {arcs[x].first, arcs[y].first});
        }
      }
    }
    return res;
  }

  if (auto* u = std::get_if<UmbrellaBase>(&d.base)) {
    for (std::size_t i = 0; i < u->spokes.size(); ++i) {
      if ((u->spokes[i].size() - 1) % 2 == 0) {
        flag("spoke sizes must be odd", {0});
        break;
      }
    }
    for (std::size_t i = 0; i < u->rims.size(); ++i) {
      if ((u->rims[i].size() - 1) % 2 == 1) {
        flag("rim sizes must be even", {0});
        break;
      }
    }
    for (int j = 1; j <= t; ++j) {
      if (!d.ear_on_base(j)) continue;
      int a = d.ears[j - 1].a();
      int b = d.ears[j - 1].b();
      bool housed = false;
      for (const auto& s : u->spokes) {
        if (index_of(s, a) >= 0 && index_of(s, b) >= 0) housed = true;
      }
      for (const auto& r : u->rims) {
        if (index_of(r, a) >= 0 && index_of(r, b) >= 0) housed = true;
      }
      if (!housed) {
        flag("attached piece spans two different umbrella parts", {j});
      }
    }
    return res;
  }
  if (auto* th = std::get_if<ThetaBase>(&d.base)) {
    bool all_two = true;
    for (const auto& r : th->routes) {
      if ((r.size() - 1) % 2 == 1) {
        flag("route sizes must be even", {0});
        break;
      }
    }
    for (const auto& r : th->routes) all_two = all_two && r.size() == 3;
    if (all_two) {
      flag("three minimal routes leave no room for half-order classes", {0});
    }
    for (int j = 1; j <= t; ++j) {
      if (!d.ear_on_base(j)) continue;
      int a = d.ears[j - 1].a();
      int b = d.ears[j - 1].b();
      bool housed = false;
      for (const auto& r : th->routes) {
        if (index_of(r, a) >= 0 && index_of(r, b) >= 0) housed = true;
      }
      if (!housed) {
        flag("attached piece spans two different routes", {j});
      }
    }
    return res;
  }
  flag("odd bipartite order requires an umbrella or three-route base", {0});
  return res;
}

namespace {

std::vector<std::vector<FPath>> all_f_paths(const Graph& g,
                                            const EarDecomposition& d) {
  int pieces = d.piece_count();
  std::vector<std::vector<FPath>> fp(pieces, std::vector<FPath>(pieces));
  for (int i = 0; i < pieces; ++i) {
    for (int j = i + 1; j < pieces; ++j) {
      fp[i][j] = f_path(g, d, i, j);
    }
  }
  return fp;
}

std::set<EdgeId> path_edge_ids(const Graph& g, const std::vector<int>& seq) {
  std::set<EdgeId> out;
  for (auto [u, v] : path_edge_pairs(seq)) {
    out.insert(edge_id_checked(g, u, v, "path edge set"));
  }
  return out;
}

}  // namespace

CheckResult check_qr(const Graph& g, const EarDecomposition& d) {
  CheckResult res;
  auto flag = [&](std::string what, std::vector<int> pieces) {
    res.pass = false;
    res.issues.push_back({std::move(what), std::move(pieces)});
  };
  int t = static_cast<int>(d.ears.size());

  for (int j = 1; j <= t; ++j) {
    int a = d.ears[j - 1].a();
    int b = d.ears[j - 1].b();
    for (int i = 0; i < j; ++i) {
      auto internals = sorted_unique(d.piece_internals(i));
      if (!contains(internals, a) && !contains(internals, b)) continue;
      auto verts = sorted_unique(d.piece_vertices(i));
      if (!contains(verts, a) || !contains(verts, b)) {
        flag("an end touches a piece interior but the other end is outside",
             {i, j});
      }
    }
  }

  auto fp = all_f_paths(g, d);
  for (int k = 0; k < t; ++k) {
    for (int i = k + 1; i <= t; ++i) {
      if (!fp[k][i].defined) continue;
      std::vector<int> interior(fp[k][i].vertices.begin() + 1,
                                fp[k][i].vertices.end() - 1);
      auto inner = sorted_unique(std::move(interior));
      auto big = path_edge_ids(g, fp[k][i].vertices);
      for (int j = k + 1; j <= t; ++j) {
        if (j == i) continue;
        int a = d.ears[j - 1].a();
        int b = d.ears[j - 1].b();
        if (!contains(inner, a) && !contains(inner, b)) continue;
        if (!fp[k][j].defined) {
          flag("an end refines a connecting path that leaves it unguided",
               {k, i, j});
          continue;
        }
        auto small = path_edge_ids(g, fp[k][j].vertices);
        bool proper = small.size() < big.size() &&
                      std::includes(big.begin(), big.end(), small.begin(),
                                    small.end());
        if (!proper) {
          flag("nested connecting paths fail to refine properly", {k, i, j});
        }
      }
    }
  }
  return res;
}

CheckResult check_parity(const Graph& g, const EarDecomposition& d) {
  CheckResult res;
  auto flag = [&](std::string what, std::vector<int> pieces) {
    res.pass = false;
    res.issues.push_back({std::move(what), std::move(pieces)});
  };
  int t = static_cast<int>(d.ears.size());
  for (int j = 1; j <= t; ++j) {
    if (d.ears[j - 1].size() % 2 == 0) {
      flag("attached pieces must have odd size", {j});
    }
  }
  auto fp = all_f_paths(g, d);
  for (int i = 0; i <= t; ++i) {
    for (int j = i + 1; j <= t; ++j) {
      if (fp[i][j].defined && fp[i][j].size() % 2 == 0) {
        flag("connecting paths must have odd size", {i, j});
      }
    }
  }
  return res;
}

namespace {

struct Candidate {
  int r = -1;
  int l = -1;
  FPath f;
};

// Deepest pieces in the definedness digraph, ordered by shortest
// connecting path, then single-edge pieces, then least index.
std::vector<Candidate> deepest_candidates(const EarDecomposition& d,
                                          const std::vector<std::vector<FPath>>& fp,
                                          std::string& why) {
  int t = static_cast<int>(d.ears.size());
  int pieces = t + 1;
  std::vector<int> least(pieces, -1);
  for (int j = 1; j <= t; ++j) {
    int a = d.ears[j - 1].a();
    int b = d.ears[j - 1].b();
    for (int i = 0; i < pieces; ++i) {
      if (i == j) continue;
      auto verts = sorted_unique(d.piece_vertices(i));
      if (contains(verts, a) && contains(verts, b)) {
        least[j] = i;
        break;
      }
    }
  }
  std::vector<int> depth(pieces, -1);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = i + 1; j < pieces; ++j) {
      if (depth[j] < 0 && fp[i][j].defined) {
        depth[j] = depth[i] + 1;
        q.push(j);
      }
    }
  }
  int deepest = 0;
  for (int j = 1; j <= t; ++j) {
    if (depth[j] < 0) {
      why = "piece " + std::to_string(j) +
            " is unreachable in the definedness digraph";
      return {};
    }
    deepest = std::max(deepest, depth[j]);
  }
  std::vector<Candidate> cands;
  for (int j = 1; j <= t; ++j) {
    if (depth[j] != deepest) continue;
    Candidate c;
    c.r = j;
    c.l = least[j];
    if (c.l >= 0 && c.l < j && fp[c.l][j].defined) c.f = fp[c.l][j];
    cands.push_back(std::move(c));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [&](const Candidate& x, const Candidate& y) {
                     int fx = x.f.defined ? x.f.size() : 1 << 20;
                     int fy = y.f.defined ? y.f.size() : 1 << 20;
                     if (fx != fy) return fx < fy;
                     int ex = d.ears[x.r - 1].size() == 1 ? 0 : 1;
                     int ey = d.ears[y.r - 1].size() == 1 ? 0 : 1;
                     if (ex != ey) return ex < ey;
                     return x.r < y.r;
                   });
  return cands;
}

std::vector<int> analysis_depths(const EarDecomposition& d,
                                 const std::vector<std::vector<FPath>>& fp) {
  int pieces = d.piece_count();
  std::vector<int> depth(pieces, -1);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = i + 1; j < pieces; ++j) {
      if (depth[j] < 0 && fp[i][j].defined) {
        depth[j] = depth[i] + 1;
        q.push(j);
      }
    }
  }
  return depth;
}

}  // namespace

DependencyAnalysis dependency_analysis(const Graph& g,
                                       const EarDecomposition& d) {
  if (d.ears.empty()) {
    throw ContractError("dependency analysis needs at least one attached piece");
  }
  auto fp = all_f_paths(g, d);
  std::string why;
  auto cands = deepest_candidates(d, fp, why);
  if (cands.empty()) throw InvariantError(why);
  const Candidate& pick = cands.front();
  if (!pick.f.defined) {
    throw InvariantError("deepest piece has no connecting path");
  }

  DependencyAnalysis out;
  out.depth = analysis_depths(d, fp);
  int t = static_cast<int>(d.ears.size());
  out.least_container.assign(t + 1, -1);
  for (int j = 1; j <= t; ++j) {
    int a = d.ears[j - 1].a();
    int b = d.ears[j - 1].b();
    for (int i = 0; i <= t; ++i) {
      if (i == j) continue;
      auto verts = sorted_unique(d.piece_vertices(i));
      if (contains(verts, a) && contains(verts, b)) {
        out.least_container[j] = i;
        break;
      }
    }
  }
  int deepest = 0;
  for (int j = 1; j <= t; ++j) deepest = std::max(deepest, out.depth[j]);
  for (int j = 1; j <= t; ++j) {
    if (out.depth[j] == deepest) out.deepest.push_back(j);
  }
  out.r = pick.r;
  out.l = pick.l;
  out.f = pick.f;

  std::vector<int> watch(pick.f.vertices.begin() + 1,
                         pick.f.vertices.end() - 1);
  auto ear_inner = d.piece_internals(pick.r);
  watch.insert(watch.end(), ear_inner.begin(), ear_inner.end());
  for (int v : watch) {
    if (g.degree(v) != 2) {
      throw InvariantError("interior vertex " + std::to_string(v) +
                           " has degree " + std::to_string(g.degree(v)) +
                           "; 2 expected");
    }
  }
  return out;
}

namespace {

// ---- construction machinery ----

using PairMap = std::map<std::pair<int, int>, int>;

std::pair<int, int> vkey(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

bool put_color(PairMap& pm, int u, int v, int color, std::string& why) {
  if (!pm.emplace(vkey(u, v), color).second) {
    why = "edge " + std::to_string(u) + "-" + std::to_string(v) +
          " colored twice during assembly";
    return false;
  }
  return true;
}

int max_color(const PairMap& pm) {
  int best = 0;
  for (const auto& [k, c] : pm) best = std::max(best, c);
  return best;
}

std::optional<std::vector<int>> colors_from_pairs(const Graph& g,
                                                  const PairMap& pm,
                                                  std::string& why) {
  std::vector<int> colors(g.m(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    auto it = pm.find(vkey(u, v));
    if (it == pm.end()) {
      why = "edge " + std::to_string(u) + "-" + std::to_string(v) +
            " left uncolored during assembly";
      return std::nullopt;
    }
    colors[e] = it->second;
  }
  return colors;
}

int run_mirror(std::vector<int>& colors, const std::vector<EdgeId>& run,
               int inherit, int fresh_base) {
  int len = static_cast<int>(run.size());
  for (int j = 1; j <= len / 2; ++j) {
    colors[run[j - 1]] = fresh_base + j;
    colors[run[len - j]] = fresh_base + j;
  }
  colors[run[len / 2]] = inherit;
  return len / 2;
}

std::vector<EdgeId> seq_edge_ids(const Graph& g, const std::vector<int>& seq) {
  std::vector<EdgeId> out;
  for (auto [u, v] : path_edge_pairs(seq)) {
    out.push_back(edge_id_checked(g, u, v, "sequence edges"));
  }
  return out;
}

std::optional<std::vector<int>> base_colors(const Graph& g,
                                            const BaseShape& base,
                                            std::string& why) {
  std::vector<int> colors(g.m(), 0);
  if (auto* c = std::get_if<OddCycleBase>(&base)) {
    int L = static_cast<int>(c->vertices.size());
    if (g.n() != L || g.m() != L) {
      why = "base cycle does not span the remaining graph";
      return std::nullopt;
    }
    std::vector<int> pat(L);
    pat[0] = pat[1] = 1;
    for (int j = 1; j <= L - 2; ++j) {
      pat[j + 1] = j == (L - 1) / 2 ? 1 : 1 + std::min(j, L - 1 - j);
    }
    auto pairs = cycle_edge_pairs(c->vertices);
    for (int i = 0; i < L; ++i) {
      colors[edge_id_checked(g, pairs[i].first, pairs[i].second, "base")] =
          pat[i];
    }
    return colors;
  }
  if (auto* c = std::get_if<EvenCycleBase>(&base)) {
    int L = static_cast<int>(c->vertices.size());
    if (g.n() != L || g.m() != L) {
      why = "base cycle does not span the remaining graph";
      return std::nullopt;
    }
    auto pairs = cycle_edge_pairs(c->vertices);
    for (int i = 0; i < L; ++i) {
      colors[edge_id_checked(g, pairs[i].first, pairs[i].second, "base")] =
          1 + i % (L / 2);
    }
    return colors;
  }
  if (auto* u = std::get_if<UmbrellaBase>(&base)) {
    int k = static_cast<int>(u->spokes.size());
    for (const auto& s : u->spokes) {
      if ((s.size() - 1) % 2 == 0) {
        why = "umbrella spokes must have odd size";
        return std::nullopt;
      }
    }
    for (const auto& r : u->rims) {
      if ((r.size() - 1) % 2 == 1) {
        why = "umbrella rims must have even size";
        return std::nullopt;
      }
    }
    int fresh = k;
    for (int i = 0; i < k; ++i) {
      fresh += run_mirror(colors, seq_edge_ids(g, u->spokes[i]), i + 1, fresh);
    }
    for (int i = 0; i < k; ++i) {
      auto run = seq_edge_ids(g, u->rims[i]);
      std::vector<EdgeId> head(run.begin(), run.end() - 1);
      fresh += run_mirror(colors, head, (i + 1) % k + 1, fresh);
      colors[run.back()] = i + 1;
    }
    for (int c2 : colors) {
      if (c2 == 0) {
        why = "umbrella base does not span the remaining graph";
        return std::nullopt;
      }
    }
    return colors;
  }
  if (auto* th = std::get_if<ThetaBase>(&base)) {
    std::vector<int> sizes;
    for (const auto& r : th->routes) {
      sizes.push_back(static_cast<int>(r.size()) - 1);
    }
    for (int s : sizes) {
      if (s % 2 == 1) {
        why = "routes must have even size";
        return std::nullopt;
      }
    }
    if (sizes[0] == 2 && sizes[1] == 2 && sizes[2] == 2) {
      why = "three minimal routes admit a single class only";
      return std::nullopt;
    }
    int big = 0;
    for (int i = 1; i < 3; ++i) {
      if (sizes[i] > sizes[big]) big = i;
    }
    std::vector<int> rest;
    for (int i = 0; i < 3; ++i) {
      if (i != big) rest.push_back(i);
    }
    int fresh = 3;
    {
      auto run = seq_edge_ids(g, th->routes[rest[0]]);
      std::vector<EdgeId> head(run.begin(), run.end() - 1);
      fresh += run_mirror(colors, head, 2, fresh);
      colors[run.back()] = 1;
    }
    {
      auto run = seq_edge_ids(g, th->routes[rest[1]]);
      std::vector<EdgeId> head(run.begin(), run.end() - 1);
      fresh += run_mirror(colors, head, 1, fresh);
      colors[run.back()] = 2;
    }
    {
      auto run = seq_edge_ids(g, th->routes[big]);
      int len = static_cast<int>(run.size());
      std::vector<EdgeId> head(run.begin(), run.begin() + (len - 3));
      fresh += run_mirror(colors, head, 3, fresh);
      colors[run[len - 3]] = 2;
      colors[run[len - 2]] = 1;
      colors[run[len - 1]] = 3;
    }
    for (int c2 : colors) {
      if (c2 == 0) {
        why = "route base does not span the remaining graph";
        return std::nullopt;
      }
    }
    return colors;
  }
  why = "unknown base shape";
  return std::nullopt;
}

struct Reduction {
  Graph graph;
  std::vector<int> to_child;   // parent vertex -> child vertex or -1
  std::vector<int> to_parent;  // child vertex -> parent vertex
};

Reduction reduce_graph(const Graph& g, const std::vector<char>& keep,
                       std::optional<EdgeId> drop_edge,
                       std::optional<std::pair<int, int>> extra_edge) {
  Reduction out;
  out.to_child.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (keep[v]) {
      out.to_child[v] = static_cast<int>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (drop_edge && *drop_edge == e) continue;
    auto [u, v] = g.edge(e);
    if (out.to_child[u] < 0 || out.to_child[v] < 0) continue;
    edges.emplace_back(out.to_child[u], out.to_child[v]);
  }
  if (extra_edge) {
    edges.emplace_back(out.to_child[extra_edge->first],
                       out.to_child[extra_edge->second]);
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

std::optional<EarDecomposition> relabel_decomposition(
    const EarDecomposition& d, const Reduction& red, std::string& why) {
  auto map_seq = [&](const std::vector<int>& seq,
                     std::vector<int>& out) -> bool {
    out.clear();
    for (int v : seq) {
      if (red.to_child[v] < 0) {
        why = "a surviving piece uses a removed vertex";
        return false;
      }
      out.push_back(red.to_child[v]);
    }
    return true;
  };
  EarDecomposition out;
  if (auto* c = std::get_if<OddCycleBase>(&d.base)) {
    OddCycleBase nb;
    if (!map_seq(c->vertices, nb.vertices)) return std::nullopt;
    out.base = std::move(nb);
  } else if (auto* c = std::get_if<EvenCycleBase>(&d.base)) {
    EvenCycleBase nb;
    if (!map_seq(c->vertices, nb.vertices)) return std::nullopt;
    nb.fixed_edge = least_cycle_edge(red.graph, nb.vertices);
    out.base = std::move(nb);
  } else if (auto* u = std::get_if<UmbrellaBase>(&d.base)) {
    UmbrellaBase nb;
    if (red.to_child[u->apex] < 0) {
      why = "a surviving piece uses a removed vertex";
      return std::nullopt;
    }
    nb.apex = red.to_child[u->apex];
    for (const auto& s : u->spokes) {
      std::vector<int> seq;
      if (!map_seq(s, seq)) return std::nullopt;
      nb.spokes.push_back(std::move(seq));
    }
    for (const auto& r : u->rims) {
      std::vector<int> seq;
      if (!map_seq(r, seq)) return std::nullopt;
      nb.rims.push_back(std::move(seq));
    }
    out.base = std::move(nb);
  } else if (auto* t = std::get_if<ThetaBase>(&d.base)) {
    ThetaBase nb;
    for (const auto& r : t->routes) {
      std::vector<int> seq;
      if (!map_seq(r, seq)) return std::nullopt;
      nb.routes.push_back(std::move(seq));
    }
    out.base = std::move(nb);
  }
  for (const Ear& e : d.ears) {
    Ear ne;
    if (!map_seq(e.vertices, ne.vertices)) return std::nullopt;
    out.ears.push_back(std::move(ne));
  }
  try {
    validate_decomposition(red.graph, out);
  } catch (const InvariantError& err) {
    why = std::string("reduced decomposition is inconsistent: ") + err.what();
    return std::nullopt;
  }
  return out;
}

EarDecomposition strip_ear(const EarDecomposition& d, int r) {
  EarDecomposition out{d.base, {}};
  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    if (static_cast<int>(i) != r - 1) out.ears.push_back(d.ears[i]);
  }
  return out;
}

// Removes the strict interior of the connecting path from its host piece,
// leaving its two ends consecutive (joined by the replacement edge).
std::optional<EarDecomposition> splice_f(const EarDecomposition& d, int l,
                                         const FPath& f, std::string& why) {
  int a = f.vertices.front();
  int b = f.vertices.back();
  auto fset = sorted_unique(f.vertices);
  EarDecomposition out = d;
  auto splice_path = [&](std::vector<int>& seq) -> bool {
    int pa = index_of(seq, a);
    int pb = index_of(seq, b);
    if (pa < 0 || pb < 0) return false;
    int lo = std::min(pa, pb);
    int hi = std::max(pa, pb);
    std::vector<int> covered(seq.begin() + lo, seq.begin() + hi + 1);
    if (sorted_unique(covered) != fset) return false;
    seq.erase(seq.begin() + lo + 1, seq.begin() + hi);
    return true;
  };
  if (l >= 1) {
    if (!splice_path(out.ears[l - 1].vertices)) {
      why = "connecting path does not sit inside its host piece";
      return std::nullopt;
    }
    return out;
  }
  if (auto* c = std::get_if<OddCycleBase>(&out.base)) {
    // Keep the complement arc; the replacement edge closes the cycle.
    const auto& seq = c->vertices;
    int L = static_cast<int>(seq.size());
    int pa = index_of(seq, a);
    std::vector<int> forward;
    for (int at = pa;; at = (at + 1) % L) {
      forward.push_back(seq[at]);
      if (seq[at] == b && forward.size() > 1) break;
    }
    if (sorted_unique(forward) == fset) {
      std::vector<int> other;
      for (int at = pa;; at = (at + L - 1) % L) {
        other.push_back(seq[at]);
        if (seq[at] == b && other.size() > 1) break;
      }
      c->vertices = std::move(other);
    } else {
      c->vertices = std::move(forward);
    }
    return out;
  }
  if (auto* c = std::get_if<EvenCycleBase>(&out.base)) {
    const auto& seq = c->vertices;
    int L = static_cast<int>(seq.size());
    int pa = index_of(seq, a);
    std::vector<int> forward;
    for (int at = pa;; at = (at + 1) % L) {
      forward.push_back(seq[at]);
      if (seq[at] == b && forward.size() > 1) break;
    }
    if (sorted_unique(forward) == fset) {
      std::vector<int> other;
      for (int at = pa;; at = (at + L - 1) % L) {
        other.push_back(seq[at]);
        if (seq[at] == b && other.size() > 1) break;
      }
      c->vertices = std::move(other);
    } else {
      c->vertices = std::move(forward);
    }
    return out;
  }
  if (auto* u = std::get_if<UmbrellaBase>(&out.base)) {
    for (auto& s : u->spokes) {
      if (splice_path(s)) return out;
    }
    for (auto& r : u->rims) {
      if (splice_path(r)) return out;
    }
    why = "connecting path does not sit inside one umbrella part";
    return std::nullopt;
  }
  if (auto* th = std::get_if<ThetaBase>(&out.base)) {
    for (auto& r : th->routes) {
      if (splice_path(r)) return out;
    }
    why = "connecting path does not sit inside one route";
    return std::nullopt;
  }
  why = "unknown base shape";
  return std::nullopt;
}

// Closes the even cycle formed by the attached path (oriented a..b) and
// the a-b edge already present in the map: the edge opposite the a-b edge
// joins its class, the remaining opposite pairs take fresh classes.
bool glue_even_cycle(PairMap& pm, const std::vector<int>& path_a_to_b,
                     std::string& why) {
  int a = path_a_to_b.front();
  int b = path_a_to_b.back();
  auto anchor = pm.find(vkey(a, b));
  if (anchor == pm.end()) {
    why = "cycle closure misses its anchor edge";
    return false;
  }
  std::vector<std::pair<int, int>> ring;
  ring.emplace_back(a, b);
  for (std::size_t i = path_a_to_b.size() - 1; i > 0; --i) {
    ring.emplace_back(path_a_to_b[i], path_a_to_b[i - 1]);
  }
  int L = static_cast<int>(ring.size());
  if (L % 2 == 1) {
    why = "cycle closure needs an even cycle";
    return false;
  }
  int half = L / 2;
  int fresh = max_color(pm);
  if (!put_color(pm, ring[half].first, ring[half].second, anchor->second,
                 why)) {
    return false;
  }
  for (int k = 1; k < half; ++k) {
    if (!put_color(pm, ring[k].first, ring[k].second, fresh + k, why)) {
      return false;
    }
    if (!put_color(pm, ring[k + half].first, ring[k + half].second, fresh + k,
                   why)) {
      return false;
    }
  }
  return true;
}

// Replaces the a-b edge in the map by the path (oriented a..b): fresh
// mirrored pairs outside-in, the middle edge keeps the replaced class.
bool lift_edge_to_path(PairMap& pm, const std::vector<int>& path_a_to_b,
                       std::string& why) {
  int a = path_a_to_b.front();
  int b = path_a_to_b.back();
  auto it = pm.find(vkey(a, b));
  if (it == pm.end()) {
    why = "path expansion misses its anchor edge";
    return false;
  }
  int inherited = it->second;
  pm.erase(it);
  int t = static_cast<int>(path_a_to_b.size()) - 1;
  int fresh = max_color(pm);
  for (int j = 1; j <= t; ++j) {
    int mirrored = std::min(j, t + 1 - j);
    int color = mirrored <= (t - 1) / 2 ? fresh + mirrored : inherited;
    if (!put_color(pm, path_a_to_b[j - 1], path_a_to_b[j], color, why)) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> build_colors(const Graph& g,
                                             const EarDecomposition& d,
                                             std::string& why);

std::optional<std::vector<int>> child_into_pairs(const Reduction& red,
                                                 const EarDecomposition& child,
                                                 PairMap& pm,
                                                 std::string& why) {
  auto sub = build_colors(red.graph, child, why);
  if (!sub) return std::nullopt;
  for (EdgeId e = 0; e < red.graph.m(); ++e) {
    auto [u, v] = red.graph.edge(e);
    if (!put_color(pm, red.to_parent[u], red.to_parent[v], (*sub)[e], why)) {
      return std::nullopt;
    }
  }
  return sub;
}

// The collapse-to-minimal-routes corner: two routes of size two plus a
// long route whose connecting path misses one end edge. The long route,
// the second short route and every attached piece form a bundle of odd
// paths between the connecting path's ends; the first short route is
// recolored from the second with its two classes exchanged.
std::optional<std::vector<int>> bundle_swap(const Graph& g,
                                            const EarDecomposition& d,
                                            const ThetaBase& tb,
                                            const Candidate& cand,
                                            std::string& why) {
  std::vector<int> sizes;
  for (const auto& r : tb.routes) {
    sizes.push_back(static_cast<int>(r.size()) - 1);
  }
  int big = -1;
  std::vector<int> small;
  for (int i = 0; i < 3; ++i) {
    if (sizes[i] == cand.f.size() + 1) {
      big = i;
    } else if (sizes[i] == 2) {
      small.push_back(i);
    }
  }
  if (big < 0 || small.size() != 2) {
    why = "collapse corner expects two minimal routes";
    return std::nullopt;
  }
  int u = tb.routes[0].front();
  int v = tb.routes[0].back();
  int fa = cand.f.vertices.front();
  int fb = cand.f.vertices.back();
  bool fa_junction = fa == u || fa == v;
  bool fb_junction = fb == u || fb == v;
  if (fa_junction == fb_junction) {
    why = "collapse corner expects one junction end";
    return std::nullopt;
  }
  int j1 = fa_junction ? fa : fb;   // junction end of the connecting path
  int y = fa_junction ? fb : fa;    // inner end, adjacent to the far junction
  int j2 = j1 == u ? v : u;
  if (!g.has_edge(y, j2)) {
    why = "collapse corner misses its spare edge";
    return std::nullopt;
  }

  auto oriented = [&](std::vector<int> seq, int from) {
    if (seq.front() != from) std::reverse(seq.begin(), seq.end());
    return seq;
  };
  std::vector<std::vector<int>> bundle;
  bundle.push_back(oriented(cand.f.vertices, j1));
  std::vector<int> bent = oriented(tb.routes[small[1]], j1);
  bent.push_back(y);
  bundle.push_back(std::move(bent));
  for (const Ear& e : d.ears) {
    if (!((e.a() == j1 && e.b() == y) || (e.a() == y && e.b() == j1))) {
      why = "collapse corner holds a piece attached elsewhere";
      return std::nullopt;
    }
    if (e.size() % 2 == 0 || e.size() < 3) {
      why = "collapse corner holds a piece of the wrong size";
      return std::nullopt;
    }
    bundle.push_back(oriented(e.vertices, j1));
  }

  PairMap pm;
  int cbase = 1;
  for (const auto& route : bundle) {
    int len = static_cast<int>(route.size()) - 1;
    if (len % 2 == 0) {
      why = "bundle routes must be odd";
      return std::nullopt;
    }
    int k = (len - 1) / 2;
    for (int j = 1; j <= len; ++j) {
      int color;
      if (j <= k) {
        color = cbase + j;
      } else if (j == k + 1) {
        color = 1;
      } else {
        color = cbase + (2 * k + 2 - j);
      }
      if (!put_color(pm, route[j - 1], route[j], color, why)) {
        return std::nullopt;
      }
    }
    cbase += k;
  }

  const auto& peel = tb.routes[small[0]];  // u .. mid .. v, size two
  const auto& keep = tb.routes[small[1]];
  std::vector<int> pk = oriented(keep, j1);
  std::vector<int> pp = oriented(peel, j1);
  int keep_first = pm.at(vkey(pk[0], pk[1]));
  int keep_second = pm.at(vkey(pk[1], pk[2]));
  for (int crossed = 1; crossed >= 0; --crossed) {
    PairMap trial = pm;
    int c1 = crossed ? keep_second : keep_first;
    int c2 = crossed ? keep_first : keep_second;
    std::string local;
    if (!put_color(trial, pp[0], pp[1], c1, local) ||
        !put_color(trial, pp[1], pp[2], c2, local)) {
      why = local;
      return std::nullopt;
    }
    auto colors = colors_from_pairs(g, trial, local);
    if (!colors) {
      why = local;
      return std::nullopt;
    }
    EdgeColoring ec{*colors};
    if (verify_md(g, ec).ok() &&
        static_cast<int>(ec.palette().size()) == g.n() / 2) {
      return colors;
    }
  }
  why = "bundle recoloring failed verification in both orientations";
  return std::nullopt;
}

std::optional<std::vector<int>> attempt_candidate(const Graph& g,
                                                  const EarDecomposition& d,
                                                  const Candidate& cand,
                                                  std::string& why) {
  if (!cand.f.defined || cand.l < 0 || cand.l >= cand.r) {
    why = "selected piece has no usable connecting path";
    return std::nullopt;
  }
  const Ear& ear = d.ears[cand.r - 1];
  int a = cand.f.vertices.front();
  int b = cand.f.vertices.back();
  if (!((ear.a() == a && ear.b() == b) || (ear.a() == b && ear.b() == a))) {
    why = "connecting path ends disagree with the piece ends";
    return std::nullopt;
  }
  {
    std::vector<int> watch(cand.f.vertices.begin() + 1,
                           cand.f.vertices.end() - 1);
    auto inner = d.piece_internals(cand.r);
    watch.insert(watch.end(), inner.begin(), inner.end());
    for (int v : watch) {
      if (g.degree(v) != 2) {
        why = "interior vertex " + std::to_string(v) + " has degree " +
              std::to_string(g.degree(v)) + "; 2 expected";
        return std::nullopt;
      }
    }
  }

  std::vector<int> ear_a_to_b = ear.vertices;
  if (ear_a_to_b.front() != a) {
    std::reverse(ear_a_to_b.begin(), ear_a_to_b.end());
  }

  if (ear.size() == 1) {
    // Swap the edge with its connecting path: the edge slides into the
    // host piece where the path was, and the path becomes the attached
    // piece, whose closing edge now exists.
    auto swapped = splice_f(d, cand.l, cand.f, why);
    if (!swapped) return std::nullopt;
    swapped->ears[cand.r - 1].vertices = cand.f.vertices;
    Candidate again{cand.r, cand.l,
                    FPath{true, {cand.f.vertices.front(),
                                 cand.f.vertices.back()}}};
    return attempt_candidate(g, *swapped, again, why);
  }

  if (g.has_edge(a, b)) {
    // The closing edge already exists: drop the interior, recurse, close.
    std::vector<char> keep(g.n(), 1);
    for (std::size_t i = 1; i + 1 < ear.vertices.size(); ++i) {
      keep[ear.vertices[i]] = 0;
    }
    Reduction red = reduce_graph(g, keep, std::nullopt, std::nullopt);
    auto child = relabel_decomposition(strip_ear(d, cand.r), red, why);
    if (!child) return std::nullopt;
    PairMap pm;
    if (!child_into_pairs(red, *child, pm, why)) return std::nullopt;
    if (!glue_even_cycle(pm, ear_a_to_b, why)) return std::nullopt;
    return colors_from_pairs(g, pm, why);
  }

  if (cand.l == 0) {
    if (auto* tb = std::get_if<ThetaBase>(&d.base)) {
      std::vector<int> shrunk;
      for (const auto& r : tb->routes) {
        shrunk.push_back(static_cast<int>(r.size()) - 1);
      }
      bool collapse = true;
      bool host_seen = false;
      for (int i = 0; i < 3; ++i) {
        int after = shrunk[i];
        if (!host_seen && shrunk[i] == cand.f.size() + 1) {
          host_seen = true;
          after = 2;
        }
        collapse = collapse && after == 2;
      }
      if (host_seen && collapse) return bundle_swap(g, d, *tb, cand, why);
    }
  }

  // Contract the connecting path, recurse, close the cycle, re-expand.
  auto spliced = splice_f(strip_ear(d, cand.r), cand.l, cand.f, why);
  if (!spliced) return std::nullopt;
  std::vector<char> keep(g.n(), 1);
  for (std::size_t i = 1; i + 1 < cand.f.vertices.size(); ++i) {
    keep[cand.f.vertices[i]] = 0;
  }
  for (std::size_t i = 1; i + 1 < ear.vertices.size(); ++i) {
    keep[ear.vertices[i]] = 0;
  }
  Reduction red = reduce_graph(g, keep, std::nullopt,
                               std::make_pair(a, b));
  auto child = relabel_decomposition(*spliced, red, why);
  if (!child) return std::nullopt;
  PairMap pm;
  if (!child_into_pairs(red, *child, pm, why)) return std::nullopt;
  if (!glue_even_cycle(pm, ear_a_to_b, why)) return std::nullopt;
  if (!lift_edge_to_path(pm, cand.f.vertices, why)) return std::nullopt;
  return colors_from_pairs(g, pm, why);
}

std::optional<std::vector<int>> build_colors(const Graph& g,
                                             const EarDecomposition& d,
                                             std::string& why) {
  if (d.ears.empty()) return base_colors(g, d.base, why);
  auto fp = all_f_paths(g, d);
  std::string cwhy;
  auto cands = deepest_candidates(d, fp, cwhy);
  if (cands.empty()) {
    why = cwhy.empty() ? "no reducible piece found" : cwhy;
    return std::nullopt;
  }
  for (const Candidate& c : cands) {
    std::string branch_why;
    auto got = attempt_candidate(g, d, c, branch_why);
    if (got) return got;
    if (why.empty()) why = branch_why;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeColoring> construct_half_coloring(const Graph& g,
                                                    const EarDecomposition& d,
                                                    std::string* why) {
  std::string note;
  auto colors = build_colors(g, d, note);
  if (!colors) {
    if (why) *why = note;
    return std::nullopt;
  }
  EdgeColoring ec{std::move(*colors)};
  auto vr = verify_md(g, ec);
  if (!vr.ok()) {
    if (why) {
      auto [u, v] = *vr.violating_pair;
      *why = "assembled coloring misses pair " + std::to_string(u) + "," +
             std::to_string(v);
    }
    return std::nullopt;
  }
  if (static_cast<int>(ec.palette().size()) != g.n() / 2) {
    if (why) {
      *why = "assembled coloring carries " +
             std::to_string(ec.palette().size()) + " classes; " +
             std::to_string(g.n() / 2) + " expected";
    }
    return std::nullopt;
  }
  return ec;
}

DecisionReport decide_half(const Graph& g) {
  if (g.n() < 3 || connectivity(g) < 2) {
    throw StructureError(
        "half-order decision requires a 2-connected graph on 3 or more "
        "vertices");
  }
  DecisionReport rep;
  rep.decomposition = normalize(g);
  rep.standard = check_standard(g, rep.decomposition);
  rep.qr = check_qr(g, rep.decomposition);
  rep.parity = check_parity(g, rep.decomposition);
  if (!rep.checks_passed()) return rep;
  std::string why;
  auto cert = construct_half_coloring(g, rep.decomposition, &why);
  if (!cert) {
    rep.anomaly =
        "structural checks passed but no certificate was produced: " + why;
    return rep;
  }
  rep.certificate = std::move(cert);
  rep.verdict = true;
  return rep;
}

}  // namespace md
