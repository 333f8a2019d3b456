#include "md/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "md/errors.hpp"

namespace md {

std::vector<int> EdgeColoring::palette() const {
  std::vector<int> p(colors);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

EdgeColoring EdgeColoring::normalized() const {
  std::map<int, int> remap;
  EdgeColoring out;
  out.colors.reserve(colors.size());
  for (int c : colors) {
    auto [it, fresh] = remap.emplace(c, static_cast<int>(remap.size()) + 1);
    out.colors.push_back(it->second);
    (void)fresh;
  }
  return out;
}

void validate_coloring(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.m()) {
    throw ContractError("coloring covers " + std::to_string(c.colors.size()) +
                        " edges, graph has " + std::to_string(g.m()));
  }
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    if (c.colors[i] <= 0) {
      throw ContractError("edge " + std::to_string(i) +
                          " has non-positive color");
    }
  }
}

SeparationCertificate::SeparationCertificate(const Graph& g,
                                             const EdgeColoring& c)
    : n_(g.n()), palette_(c.palette()) {
  labels_.reserve(palette_.size());
  std::vector<char> removed(g.m(), 0);
  for (int color : palette_) {
    std::fill(removed.begin(), removed.end(), 0);
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (c.colors[e] == color) removed[e] = 1;
    }
    labels_.push_back(g.component_labels_without(removed));
  }
}

int SeparationCertificate::palette_index(int color) const {
  auto it = std::lower_bound(palette_.begin(), palette_.end(), color);
  if (it == palette_.end() || *it != color) {
    throw ContractError("color " + std::to_string(color) +
                        " is not in the palette");
  }
  return static_cast<int>(it - palette_.begin());
}

const std::vector<int>& SeparationCertificate::components_without(
    int color) const {
  return labels_[palette_index(color)];
}

std::vector<int> SeparationCertificate::separating_colors(int u, int v) const {
  if (u == v) throw ContractError("separation query needs distinct vertices");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ContractError("separation query vertex out of range");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < palette_.size(); ++i) {
    if (labels_[i][u] != labels_[i][v]) out.push_back(palette_[i]);
  }
  return out;
}

int SeparationCertificate::separation_count(int u, int v) const {
  return static_cast<int>(separating_colors(u, v).size());
}

long long SeparationCertificate::separated_pair_count(int color) const {
  const std::vector<int>& labels = labels_[palette_index(color)];
  std::vector<long long> sizes;
  for (int l : labels) {
    if (l >= static_cast<int>(sizes.size())) sizes.resize(l + 1, 0);
    ++sizes[l];
  }
  long long total = static_cast<long long>(n_) * (n_ - 1) / 2;
  for (long long s : sizes) total -= s * (s - 1) / 2;
  return total;
}

VerifyResult verify_md(const Graph& g, const EdgeColoring& c) {
  validate_coloring(g, c);
  if (!g.is_connected()) {
    throw ContractError("verification requires a connected graph");
  }
  SeparationCertificate cert(g, c);
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      bool separated = false;
      for (std::size_t i = 0; i < cert.palette().size() && !separated; ++i) {
        const std::vector<int>& labels =
            cert.components_without(cert.palette()[i]);
        separated = labels[u] != labels[v];
      }
      if (!separated) {
        VerifyResult r;
        r.violating_pair = {u, v};
        return r;
      }
    }
  }
  VerifyResult r;
  r.certificate.emplace(std::move(cert));
  return r;
}

int color_degree(const Graph& g, const EdgeColoring& c, int v) {
  validate_coloring(g, c);
  std::set<int> seen;
  for (EdgeId e : g.incident_edges(v)) seen.insert(c.colors[e]);
  return static_cast<int>(seen.size());
}

namespace {

void check_triangles(const Graph& g, const EdgeColoring& c,
                     ConditionReport& report) {
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      auto ab = g.edge_id(a, b);
      if (!ab) continue;
      for (int d = b + 1; d < g.n(); ++d) {
        auto ad = g.edge_id(a, d);
        auto bd = g.edge_id(b, d);
        if (!ad || !bd) continue;
        const int x = c.colors[*ab], y = c.colors[*ad], z = c.colors[*bd];
        if (x != y || y != z) {
          report.violations.push_back(
              {ConditionViolation::Kind::Triangle, {a, b, d}});
        }
      }
    }
  }
}

void check_four_cycles(const Graph& g, const EdgeColoring& c,
                       ConditionReport& report) {
  // A 4-cycle a-b-x-d is generated once from its diagonal pair {a,x} with
  // a the least cycle vertex.
  for (int a = 0; a < g.n(); ++a) {
    for (int x = a + 1; x < g.n(); ++x) {
      std::vector<int> common;
      for (int w : g.neighbors(a)) {
        if (w != x && w > a && g.has_edge(w, x)) common.push_back(w);
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const int b = common[i], d = common[j];
          const int ab = c.colors[*g.edge_id(a, b)];
          const int bx = c.colors[*g.edge_id(b, x)];
          const int xd = c.colors[*g.edge_id(x, d)];
          const int da = c.colors[*g.edge_id(d, a)];
          if (ab != xd || bx != da) {
            report.violations.push_back(
                {ConditionViolation::Kind::FourCycle, {a, b, x, d}});
          }
        }
      }
    }
  }
}

void check_five_cycles(const Graph& g, const EdgeColoring& c,
                       ConditionReport& report) {
  // DFS paths a < rest, direction fixed by second < last vertex.
  const int n = g.n();
  for (int a = 0; a < n; ++a) {
    std::vector<int> path = {a};
    std::vector<char> used(n, 0);
    used[a] = 1;
    auto dfs = [&](auto&& self, int v) -> void {
      if (path.size() == 5) {
        if (!g.has_edge(v, a)) return;
        if (path[1] > path[4]) return;
        int e[5];
        for (int i = 0; i < 5; ++i) {
          e[i] = c.colors[*g.edge_id(path[i], path[(i + 1) % 5])];
        }
        bool adjacent_pair = false;
        for (int i = 0; i < 5 && !adjacent_pair; ++i) {
          adjacent_pair = e[i] == e[(i + 1) % 5];
        }
        if (!adjacent_pair) {
          report.violations.push_back(
              {ConditionViolation::Kind::FiveCycle, path});
        }
        return;
      }
      for (int w : g.neighbors(v)) {
        if (w <= a || used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        used[w] = 0;
      }
    };
    dfs(dfs, a);
  }
}

}  // namespace

ConditionReport necessary_conditions_check(const Graph& g,
                                           const EdgeColoring& c) {
  validate_coloring(g, c);
  ConditionReport report;
  check_triangles(g, c, report);
  check_four_cycles(g, c, report);
  check_five_cycles(g, c, report);
  return report;
}

LinearHypergraph build_hypergraph(const Graph& g, const EdgeColoring& c,
                                  const SeparationCertificate& cert) {
  validate_coloring(g, c);
  if (cert.n() != g.n()) {
    throw ContractError("certificate was built for a different graph");
  }
  LinearHypergraph h;
  h.n = g.n();
  for (int color : c.palette()) {
    // Union-find over the endpoints of this color's edges.
    std::vector<int> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<char> touched(g.n(), 0);
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (c.colors[e] != color) continue;
      auto [u, v] = g.edge(e);
      touched[u] = touched[v] = 1;
      parent[find(u)] = find(v);
    }
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < g.n(); ++v) {
      if (touched[v]) comps[find(v)].push_back(v);
    }
    int index = 0;
    for (auto& [root, verts] : comps) {
      h.edges.push_back({std::move(verts), color, index++});
    }
  }
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(h.edges[i].vertices.begin(),
                            h.edges[i].vertices.end(),
                            h.edges[j].vertices.begin(),
                            h.edges[j].vertices.end(),
                            std::back_inserter(inter));
      if (inter.size() > 1) {
        throw InvariantError(
            "hyperedges " + std::to_string(i) + " and " + std::to_string(j) +
            " share " + std::to_string(inter.size()) +
            " vertices; the coloring cannot be a verified one");
      }
    }
  }
  return h;
}

Graph closure_graph(const LinearHypergraph& h) {
  std::set<std::pair<int, int>> pairs;
  for (const Hyperedge& e : h.edges) {
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < e.vertices.size(); ++j) {
        pairs.emplace(e.vertices[i], e.vertices[j]);
      }
    }
  }
  std::vector<std::pair<int, int>> edges(pairs.begin(), pairs.end());
  return Graph(h.n, edges);
}

namespace {

// Index of the single shared vertex, or -1 when disjoint (or overlapping in
// 2+, which build_hypergraph already rejects).
int shared_vertex(const Hyperedge& a, const Hyperedge& b) {
  std::vector<int> inter;
  std::set_intersection(a.vertices.begin(), a.vertices.end(),
                        b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(inter));
  return inter.size() == 1 ? inter[0] : -1;
}

}  // namespace

HypercycleReport hypergraph_cycle_check(const LinearHypergraph& h) {
  const int k = static_cast<int>(h.edges.size());
  std::vector<std::vector<int>> meet(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      meet[i][j] = meet[j][i] = shared_vertex(h.edges[i], h.edges[j]);
    }
  }
  HypercycleReport report;
  // Hypercycles of size s: hyperedge sequence with s pairwise distinct
  // meeting vertices; enumerate with the least index first and the second
  // index below the last to fix direction.
  for (int s : {3, 4, 5}) {
    if (!report.ok) break;
    std::vector<int> seq;
    std::vector<int> verts;
    auto dfs = [&](auto&& self, int cur) -> void {
      if (!report.ok) return;
      if (static_cast<int>(seq.size()) == s) {
        const int close = meet[cur][seq[0]];
        if (close < 0) return;
        if (seq[1] > seq.back()) return;
        for (int v : verts) {
          if (v == close) return;
        }
        if (s == 3 || s == 5) {
          report.ok = false;
          report.detail = "hypercycle of size " + std::to_string(s) +
                          " through hyperedges";
          for (int e : seq) report.detail += " " + std::to_string(e);
          return;
        }
        const int c0 = h.edges[seq[0]].color, c1 = h.edges[seq[1]].color;
        const int c2 = h.edges[seq[2]].color, c3 = h.edges[seq[3]].color;
        if (c0 != c2 || c1 != c3) {
          report.ok = false;
          report.detail = "size-4 hypercycle with mismatched opposite colors";
        }
        return;
      }
      for (int next = seq[0] + 1; next < k; ++next) {
        if (!report.ok) return;
        if (std::find(seq.begin(), seq.end(), next) != seq.end()) continue;
        const int v = meet[cur][next];
        if (v < 0) continue;
        if (std::find(verts.begin(), verts.end(), v) != verts.end()) continue;
        seq.push_back(next);
        verts.push_back(v);
        self(self, next);
        seq.pop_back();
        verts.pop_back();
      }
    };
    for (int start = 0; start < k && report.ok; ++start) {
      seq = {start};
      verts.clear();
      dfs(dfs, start);
    }
  }
  return report;
}

}  // namespace md
