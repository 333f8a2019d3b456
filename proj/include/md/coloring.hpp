#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "md/graph.hpp"

namespace md {

// Total edge coloring: colors_[e] is the positive color id of edge e.
struct EdgeColoring {
  std::vector<int> colors;

  // Sorted distinct color ids actually used.
  std::vector<int> palette() const;
  // Remap colors to 1..k in order of first appearance along edge ids.
  EdgeColoring normalized() const;
};

// Throws ContractError unless the coloring is total over E(g) with
// positive ids.
void validate_coloring(const Graph& g, const EdgeColoring& c);

// Per-color component partitions of g minus that color class, built once
// and queried per vertex pair.
class SeparationCertificate {
 public:
  SeparationCertificate(const Graph& g, const EdgeColoring& c);

  int n() const { return n_; }
  const std::vector<int>& palette() const { return palette_; }
  // Component labels of g with color i's edges deleted.
  const std::vector<int>& components_without(int color) const;
  // C_Γ(u,v): sorted colors whose removal separates u and v.
  std::vector<int> separating_colors(int u, int v) const;
  // c_Γ(u,v) = |C_Γ(u,v)|.
  int separation_count(int u, int v) const;
  // |S_i|: unordered pairs separated by color i.
  long long separated_pair_count(int color) const;

 private:
  int palette_index(int color) const;

  int n_ = 0;
  std::vector<int> palette_;
  std::vector<std::vector<int>> labels_;
};

struct VerifyResult {
  std::optional<SeparationCertificate> certificate;   // set iff verified
  std::optional<std::pair<int, int>> violating_pair;  // lexicographically first
  bool ok() const { return certificate.has_value(); }
};

// A coloring is accepted iff every vertex pair is separated by some color.
// Requires g connected and c total.
VerifyResult verify_md(const Graph& g, const EdgeColoring& c);

// Number of distinct colors on edges incident to v (0 when isolated).
int color_degree(const Graph& g, const EdgeColoring& c, int v);

// Structural requirements any accepted coloring satisfies: triangles carry
// one color; in every 4-cycle both opposite edge pairs match; every 5-cycle
// has two adjacent equal-colored edges. Necessary, not sufficient.
struct ConditionViolation {
  enum class Kind { Triangle, FourCycle, FiveCycle };
  Kind kind;
  std::vector<int> vertices;  // cycle vertices in traversal order
};
struct ConditionReport {
  std::vector<ConditionViolation> violations;
  bool ok() const { return violations.empty(); }
};
ConditionReport necessary_conditions_check(const Graph& g,
                                           const EdgeColoring& c);

// Hypergraph whose hyperedges are the nontrivial components of each color
// class subgraph; any two hyperedges share at most one vertex when the
// coloring is verified.
struct Hyperedge {
  std::vector<int> vertices;  // sorted
  int color;
  int component_index;  // index among this color's components
};
struct LinearHypergraph {
  int n = 0;
  std::vector<Hyperedge> edges;
};

// Throws InvariantError naming the offending hyperedges if two of them
// share two or more vertices (signals a non-verified input).
LinearHypergraph build_hypergraph(const Graph& g, const EdgeColoring& c,
                                  const SeparationCertificate& cert);

// Each hyperedge becomes a clique on the same vertex set.
Graph closure_graph(const LinearHypergraph& h);

// Asserts: no hypercycle of size 3 or 5 (consecutive hyperedges meeting in
// distinct single vertices around the cycle), and every size-4 hypercycle
// has equal-colored opposite hyperedges.
struct HypercycleReport {
  bool ok = true;
  std::string detail;  // empty when ok
};
HypercycleReport hypergraph_cycle_check(const LinearHypergraph& h);

}  // namespace md
