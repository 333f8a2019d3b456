#include "md/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "md/errors.hpp"
#include "md/product.hpp"

namespace md {

namespace {

CertifiedGraph certify(Graph g, std::vector<int> colors, int claimed,
                       std::string provenance) {
  EdgeColoring coloring{std::move(colors)};
  auto result = verify_md(g, coloring);
  if (!result.ok()) {
    throw InvariantError("constructed coloring fails to separate a pair (" +
                         provenance + ")");
  }
  if (static_cast<int>(coloring.palette().size()) != claimed) {
    throw InvariantError("constructed coloring palette size disagrees with "
                         "its certified value (" +
                         provenance + ")");
  }
  return CertifiedGraph{std::move(g), std::move(coloring), claimed,
                        std::move(provenance)};
}

CertifiedGraph single_vertex(std::string provenance) {
  return certify(Graph(1, {}), {}, 0, std::move(provenance));
}

CertifiedGraph rainbow_tree(int n, std::vector<std::pair<int, int>> edges,
                            std::string provenance) {
  Graph g(n, edges);
  if (!g.is_connected() || g.m() != n - 1) {
    throw ContractError("edge list does not describe a tree");
  }
  std::vector<int> colors(g.m());
  for (int e = 0; e < g.m(); ++e) colors[e] = e + 1;
  return certify(std::move(g), std::move(colors), n - 1,
                 std::move(provenance));
}

CertifiedGraph gen_cycle(int n) {
  if (n < 3) throw ContractError("cycle order must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::vector<int> colors(n);
  if (n % 2 == 0) {
    for (int i = 0; i < n; ++i) colors[i] = 1 + i % (n / 2);
  } else {
    // Two adjacent edges share the first class; the remaining odd path is
    // mirrored around its middle edge, which also joins the first class.
    colors[0] = colors[1] = 1;
    for (int j = 1; j <= n - 2; ++j) {
      colors[j + 1] = j == (n - 1) / 2 ? 1 : 1 + std::min(j, n - 1 - j);
    }
  }
  return certify(Graph(n, edges), std::move(colors), n / 2,
                 "cycle classes from mirrored edge pairs");
}

CertifiedGraph gen_complete(int n) {
  if (n < 1) throw ContractError("complete graph order must be positive");
  if (n == 1) return single_vertex("single vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  std::vector<int> colors(edges.size(), 1);
  return certify(Graph(n, edges), std::move(colors), 1,
                 "single class on a complete graph");
}

CertifiedGraph gen_path(int n) {
  if (n < 1) throw ContractError("path order must be positive");
  if (n == 1) return single_vertex("single vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return rainbow_tree(n, std::move(edges), "rainbow path");
}

CertifiedGraph gen_complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) {
    throw ContractError("complete bipartite sides must be positive");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
  if (s == 1 || t == 1) {
    return rainbow_tree(s + t, std::move(edges), "rainbow star");
  }
  if (s == 2 && t == 2) {
    // The 4-cycle 0-2-1-3; its two matchings are the two classes.
    std::vector<int> colors = {1, 2, 2, 1};
    return certify(Graph(4, edges), std::move(colors), 2,
                   "paired 4-cycle classes");
  }
  // Every nonadjacent pair has two or more common neighbours and the graph
  // is not a product of two cliques, so one class is best possible.
  std::vector<int> colors(edges.size(), 1);
  return certify(Graph(s + t, edges), std::move(colors), 1,
                 "single class on a complete bipartite graph");
}

CertifiedGraph gen_join(const FamilySpec& base) {
  CertifiedGraph inner = generate(base);
  int n = inner.graph.n();
  std::vector<std::pair<int, int>> edges = inner.graph.edges();
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
  std::vector<int> colors(edges.size(), 1);
  return certify(Graph(n + 1, edges), std::move(colors), 1,
                 "single class under a dominating apex");
}

int max_color(const std::vector<int>& colors) {
  int best = 0;
  for (int c : colors) best = std::max(best, c);
  return best;
}

// Colors an odd run of edges (given as edge ids in path order) like a
// subdivided single edge: mirrored fresh pairs outside-in, middle keeps
// `inherit`. Returns the number of fresh colors consumed.
int color_odd_run(std::vector<int>& colors, const std::vector<EdgeId>& run,
                  int inherit, int fresh_base) {
  int len = static_cast<int>(run.size());
  for (int j = 1; j <= len / 2; ++j) {
    colors[run[j - 1]] = fresh_base + j;
    colors[run[len - j]] = fresh_base + j;
  }
  colors[run[len / 2]] = inherit;
  return len / 2;
}

}  // namespace

CertifiedGraph gen_basic(const FamilySpec& spec) {
  if (auto* c = std::get_if<CycleSpec>(&spec.value)) return gen_cycle(c->n);
  if (auto* c = std::get_if<CompleteSpec>(&spec.value)) {
    return gen_complete(c->n);
  }
  if (auto* p = std::get_if<PathSpec>(&spec.value)) return gen_path(p->n);
  if (auto* b = std::get_if<CompleteBipartiteSpec>(&spec.value)) {
    return gen_complete_bipartite(b->s, b->t);
  }
  if (auto* t = std::get_if<TreeSpec>(&spec.value)) {
    if (t->edges.empty()) return single_vertex("single vertex");
    int n = 0;
    for (auto [u, v] : t->edges) n = std::max({n, u + 1, v + 1});
    return rainbow_tree(n, t->edges, "rainbow tree");
  }
  if (auto* j = std::get_if<JoinSpec>(&spec.value)) {
    return gen_join(*j->base);
  }
  throw ContractError(
      "gen_basic handles cycle, complete, path, tree, biclique and join "
      "specs only");
}

CertifiedGraph product_coloring(const CertifiedGraph& a,
                                const CertifiedGraph& b) {
  EdgeColoring left = a.coloring.normalized();
  EdgeColoring right = b.coloring.normalized();
  int offset = static_cast<int>(left.palette().size());
  ProductGraph pg = cartesian_product(a.graph, b.graph);
  std::vector<int> colors(pg.graph.m());
  for (int e = 0; e < pg.graph.m(); ++e) {
    auto [factor, fe] = pg.edge_origin[e];
    colors[e] = factor == 0 ? left.colors[fe] : offset + right.colors[fe];
  }
  return certify(std::move(pg.graph), std::move(colors),
                 a.claimed_md + b.claimed_md,
                 "factor classes on disjoint palettes");
}

CertifiedGraph gen_A_family(int n,
                            std::span<const std::pair<int, int>> removed) {
  if (n < 4) throw ContractError("the twin-clique family starts at order 4");
  int s = (n + 1) / 2;
  int t = n / 2;
  std::set<std::pair<int, int>> dropped;
  if (!removed.empty()) {
    if (n % 2 == 0) {
      throw ContractError("matching removal applies to odd orders only");
    }
    std::set<int> used;
    for (auto [x, y] : removed) {
      if (x == y || x < 1 || y < 1 || x > (n - 1) / 2 || y > (n - 1) / 2) {
        throw ContractError(
            "removed pairs must name distinct matched positions of the "
            "larger clique");
      }
      if (!used.insert(x).second || !used.insert(y).second) {
        throw ContractError("removed pairs must form a matching");
      }
      dropped.insert({std::min(x, y), std::max(x, y)});
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= s; ++i) {
    for (int j = i + 1; j <= s; ++j) {
      if (!dropped.count({i, j})) edges.emplace_back(i - 1, j - 1);
    }
  }
  for (int i = 1; i <= t; ++i) {
    for (int j = i + 1; j <= t; ++j) {
      edges.emplace_back(s + i - 1, s + j - 1);
    }
  }
  std::size_t clique_edges = edges.size();
  for (int i = 1; i <= t; ++i) edges.emplace_back(i - 1, s + i - 1);
  std::vector<int> colors(edges.size(), 1);
  for (std::size_t e = clique_edges; e < edges.size(); ++e) colors[e] = 2;
  return certify(Graph(n, edges), std::move(colors), 2,
                 "two near-half cliques joined by a matching");
}

CertifiedGraph gen_umbrella(std::span<const int> spokes,
                            std::span<const int> rims) {
  int k = static_cast<int>(spokes.size());
  if (k < 3 || static_cast<int>(rims.size()) != k) {
    throw ContractError(
        "umbrella requires equally many spokes and rims, at least 3 each");
  }
  for (int s : spokes) {
    if (s < 1 || s % 2 == 0) {
      throw ContractError("spoke sizes must be odd and positive");
    }
  }
  for (int r : rims) {
    if (r < 2 || r % 2 == 1) {
      throw ContractError("rim sizes must be even and at least 2");
    }
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<EdgeId>> spoke_edges(k), rim_edges(k);
  std::vector<int> tip(k);
  int next = 1;  // vertex 0 is the apex
  for (int i = 0; i < k; ++i) {
    int prev = 0;
    for (int step = 1; step < spokes[i]; ++step) {
      edges.emplace_back(prev, next);
      spoke_edges[i].push_back(static_cast<EdgeId>(edges.size()) - 1);
      prev = next++;
    }
    edges.emplace_back(prev, next);
    spoke_edges[i].push_back(static_cast<EdgeId>(edges.size()) - 1);
    tip[i] = next++;
  }
  for (int i = 0; i < k; ++i) {
    int prev = tip[i];
    for (int step = 1; step < rims[i]; ++step) {
      edges.emplace_back(prev, next);
      rim_edges[i].push_back(static_cast<EdgeId>(edges.size()) - 1);
      prev = next++;
    }
    edges.emplace_back(prev, tip[(i + 1) % k]);
    rim_edges[i].push_back(static_cast<EdgeId>(edges.size()) - 1);
  }

  std::vector<int> colors(edges.size());
  int fresh = k;
  for (int i = 0; i < k; ++i) {
    fresh += color_odd_run(colors, spoke_edges[i], i + 1, fresh);
  }
  for (int i = 0; i < k; ++i) {
    std::vector<EdgeId> head(rim_edges[i].begin(), rim_edges[i].end() - 1);
    fresh += color_odd_run(colors, head, (i + 1) % k + 1, fresh);
    colors[rim_edges[i].back()] = i + 1;
  }

  int claimed = fresh;
  return certify(Graph(next, edges), std::move(colors), claimed,
                 "cycle with mirrored apex paths");
}

CertifiedGraph gen_theta(int a, int b, int c) {
  for (int s : {a, b, c}) {
    if (s < 2 || s % 2 == 1) {
      throw ContractError("route sizes must be even and at least 2");
    }
  }
  std::vector<int> sizes = {a, b, c};
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<EdgeId>> route(3);
  int next = 2;  // vertices 0 and 1 are the shared ends
  for (int i = 0; i < 3; ++i) {
    int prev = 0;
    for (int step = 1; step < sizes[i]; ++step) {
      edges.emplace_back(prev, next);
      route[i].push_back(static_cast<EdgeId>(edges.size()) - 1);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
    route[i].push_back(static_cast<EdgeId>(edges.size()) - 1);
  }
  Graph g(next, edges);

  if (a == 2 && b == 2 && c == 2) {
    // No route can host a second class: one class is best possible.
    std::vector<int> colors(edges.size(), 1);
    return certify(std::move(g), std::move(colors), 1,
                   "single class on three 2-routes");
  }

  int big = 0;
  for (int i = 1; i < 3; ++i) {
    if (sizes[i] > sizes[big]) big = i;
  }
  std::vector<int> rest;
  for (int i = 0; i < 3; ++i) {
    if (i != big) rest.push_back(i);
  }

  std::vector<int> colors(edges.size());
  int fresh = 3;
  {
    // First side route: all but the last edge mirror around class 2, the
    // last edge is class 1.
    const auto& r = route[rest[0]];
    std::vector<EdgeId> head(r.begin(), r.end() - 1);
    fresh += color_odd_run(colors, head, 2, fresh);
    colors[r.back()] = 1;
  }
  {
    // Second side route: mirrored around class 1, last edge class 2.
    const auto& r = route[rest[1]];
    std::vector<EdgeId> head(r.begin(), r.end() - 1);
    fresh += color_odd_run(colors, head, 1, fresh);
    colors[r.back()] = 2;
  }
  {
    // Long route: an odd head mirrored around class 3, then classes 2, 1,
    // and 3 on the final three edges.
    const auto& r = route[big];
    int len = static_cast<int>(r.size());
    std::vector<EdgeId> head(r.begin(), r.begin() + (len - 3));
    fresh += color_odd_run(colors, head, 3, fresh);
    colors[r[len - 3]] = 2;
    colors[r[len - 2]] = 1;
    colors[r[len - 1]] = 3;
  }
  return certify(std::move(g), std::move(colors), fresh,
                 "three even routes with mirrored interiors");
}

CertifiedGraph gen_multipath(std::span<const int> halves) {
  if (halves.size() < 2) {
    throw ContractError("at least two parallel paths are required");
  }
  for (int kk : halves) {
    if (kk < 1) throw ContractError("path half-sizes must be positive");
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
  int next = 2;  // vertices 0 and 1 are the shared ends
  int base = 1;
  for (int kk : halves) {
    int prev = 0;
    for (int j = 1; j <= 2 * kk + 1; ++j) {
      int to = j == 2 * kk + 1 ? 1 : next++;
      edges.emplace_back(prev, to);
      prev = to;
      if (j <= kk) {
        colors.push_back(base + j);
      } else if (j == kk + 1) {
        colors.push_back(1);
      } else {
        colors.push_back(base + (2 * kk + 2 - j));
      }
    }
    base += kk;
  }
  return certify(Graph(next, edges), std::move(colors), base,
                 "odd path bundle with a shared middle class");
}

CertifiedGraph path_replace_lift(const CertifiedGraph& cg, EdgeId e, int t) {
  if (e < 0 || e >= cg.graph.m()) throw ContractError("edge id out of range");
  if (t < 1) throw ContractError("replacement path size must be positive");
  if (t == 1) return cg;
  auto [a, b] = cg.graph.edge(e);
  int n = cg.graph.n();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
  for (int i = 0; i < cg.graph.m(); ++i) {
    if (i == e) continue;
    edges.push_back(cg.graph.edge(i));
    colors.push_back(cg.coloring.colors[i]);
  }
  int fresh = max_color(cg.coloring.colors);
  int inherited = cg.coloring.colors[e];
  int prev = a;
  for (int j = 1; j <= t; ++j) {
    int to = j == t ? b : n + j - 1;
    edges.emplace_back(prev, to);
    prev = to;
    int mirrored = std::min(j, t + 1 - j);
    colors.push_back(mirrored <= (t - 1) / 2 ? fresh + mirrored : inherited);
  }
  return certify(Graph(n + t - 1, edges), std::move(colors),
                 cg.claimed_md + (t - 1) / 2,
                 "edge subdivision with mirrored fresh pairs");
}

CertifiedGraph add_edge_lift(const CertifiedGraph& cg, int u, int v) {
  if (u < 0 || v < 0 || u >= cg.graph.n() || v >= cg.graph.n() || u == v) {
    throw ContractError("endpoints must be two distinct vertices");
  }
  if (cg.graph.has_edge(u, v)) {
    throw ContractError("endpoints must be nonadjacent");
  }
  SeparationCertificate cert(cg.graph, cg.coloring);
  auto separating = cert.separating_colors(u, v);
  if (separating.size() != 1) {
    throw ContractError("pair is separated by " +
                        std::to_string(separating.size()) +
                        " colors; exactly one is required");
  }
  std::vector<std::pair<int, int>> edges = cg.graph.edges();
  edges.emplace_back(u, v);
  std::vector<int> colors = cg.coloring.colors;
  colors.push_back(separating.front());
  return certify(Graph(cg.graph.n(), edges), std::move(colors), cg.claimed_md,
                 "chord added at a uniquely separated pair");
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("trailing characters after family spec", pos_);
    }
    return spec;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(byte(pos_))) ++pos_;
  }

  unsigned char byte(std::size_t i) const {
    return static_cast<unsigned char>(text_[i]);
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!at(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(byte(pos_)) || at('_'))) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a family name", pos_);
    std::string name(text_.substr(start, pos_ - start));
    for (char& c : name) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return name;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(byte(pos_))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_,
                                     value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      throw ParseError("integer out of range", start);
    }
    return value;
  }

  // True when a ',' here continues the current number list rather than
  // starting a sibling spec inside an enclosing paren form.
  bool list_continues() const {
    if (pos_ >= text_.size() || text_[pos_] != ',') return false;
    std::size_t look = pos_ + 1;
    while (look < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[look]))) {
      ++look;
    }
    return look < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[look]));
  }

  std::vector<int> parse_int_list() {
    std::vector<int> values = {parse_int()};
    while (list_continues()) {
      ++pos_;
      values.push_back(parse_int());
    }
    return values;
  }

  std::vector<std::pair<int, int>> parse_pair_list() {
    std::vector<std::pair<int, int>> pairs;
    while (true) {
      int u = parse_int();
      expect('-');
      int v = parse_int();
      pairs.emplace_back(u, v);
      if (!list_continues()) break;
      ++pos_;
    }
    return pairs;
  }

  FamilySpec parse_spec() {
    std::size_t name_pos = pos_;
    std::string name = parse_name();
    skip_ws();
    if (name == "product") {
      expect('(');
      auto left = std::make_shared<FamilySpec>(parse_spec());
      skip_ws();
      expect(',');
      auto right = std::make_shared<FamilySpec>(parse_spec());
      skip_ws();
      expect(')');
      return FamilySpec{ProductSpec{std::move(left), std::move(right)}};
    }
    if (name == "join") {
      expect('(');
      auto base = std::make_shared<FamilySpec>(parse_spec());
      skip_ws();
      expect(')');
      return FamilySpec{JoinSpec{std::move(base)}};
    }
    if (name == "cycle" || name == "complete" || name == "path") {
      expect(':');
      int n = parse_int();
      if (name == "cycle") return FamilySpec{CycleSpec{n}};
      if (name == "complete") return FamilySpec{CompleteSpec{n}};
      return FamilySpec{PathSpec{n}};
    }
    if (name == "biclique" || name == "complete_bipartite") {
      expect(':');
      auto values = parse_int_list();
      if (values.size() != 2) {
        throw ParseError("expected two side sizes", pos_);
      }
      return FamilySpec{CompleteBipartiteSpec{values[0], values[1]}};
    }
    if (name == "tree") {
      expect(':');
      return FamilySpec{TreeSpec{parse_pair_list()}};
    }
    if (name == "afamily") {
      expect(':');
      int n = parse_int();
      AFamilySpec spec{n, {}};
      if (at(';')) {
        ++pos_;
        spec.removed = parse_pair_list();
      }
      return FamilySpec{spec};
    }
    if (name == "umbrella") {
      expect(':');
      auto spokes = parse_int_list();
      expect(';');
      auto rims = parse_int_list();
      return FamilySpec{UmbrellaSpec{std::move(spokes), std::move(rims)}};
    }
    if (name == "theta") {
      expect(':');
      auto values = parse_int_list();
      if (values.size() != 3) {
        throw ParseError("expected three route sizes", pos_);
      }
      return FamilySpec{ThetaSpec{values[0], values[1], values[2]}};
    }
    if (name == "multipath") {
      expect(':');
      return FamilySpec{MultiPathSpec{parse_int_list()}};
    }
    if (name == "krboxpath") {
      expect(':');
      auto values = parse_int_list();
      if (values.size() != 2) {
        throw ParseError("expected a clique order and a path order", pos_);
      }
      return FamilySpec{KrBoxPathSpec{values[0], values[1]}};
    }
    throw ParseError("unknown family name '" + name + "'", name_pos);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  return SpecParser(text).parse();
}

CertifiedGraph generate(const FamilySpec& spec) {
  if (auto* p = std::get_if<ProductSpec>(&spec.value)) {
    return product_coloring(generate(*p->left), generate(*p->right));
  }
  if (auto* a = std::get_if<AFamilySpec>(&spec.value)) {
    return gen_A_family(a->n, a->removed);
  }
  if (auto* u = std::get_if<UmbrellaSpec>(&spec.value)) {
    return gen_umbrella(u->spokes, u->rims);
  }
  if (auto* t = std::get_if<ThetaSpec>(&spec.value)) {
    return gen_theta(t->a, t->b, t->c);
  }
  if (auto* m = std::get_if<MultiPathSpec>(&spec.value)) {
    return gen_multipath(m->halves);
  }
  if (auto* kp = std::get_if<KrBoxPathSpec>(&spec.value)) {
    return product_coloring(gen_complete(kp->r), gen_path(kp->k));
  }
  return gen_basic(spec);
}

}  // namespace md
