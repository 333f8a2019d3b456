#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "md/coloring.hpp"
#include "md/graph.hpp"

namespace md {

// Base shapes for an open ear decomposition. Paths and cycles are stored as
// vertex sequences in the host graph's labels.
struct OddCycleBase {
  std::vector<int> vertices;  // cyclic order
};
struct EvenCycleBase {
  std::vector<int> vertices;  // cyclic order
  EdgeId fixed_edge = -1;     // least edge id on the cycle; arc anchor
};
struct UmbrellaBase {
  int apex = -1;
  // spokes[i] runs apex..tip_i; rims[i] runs tip_i..tip_{i+1 mod k}.
  std::vector<std::vector<int>> spokes;
  std::vector<std::vector<int>> rims;
};
struct ThetaBase {
  // Three internally disjoint routes sharing both endpoints, each stored
  // from the same first vertex to the same last vertex.
  std::vector<std::vector<int>> routes;
};

using BaseShape =
    std::variant<OddCycleBase, EvenCycleBase, UmbrellaBase, ThetaBase>;

// An ear is a path whose two distinct ends lie in earlier pieces and whose
// interior vertices are new.
struct Ear {
  std::vector<int> vertices;
  int size() const { return static_cast<int>(vertices.size()) - 1; }
  int a() const { return vertices.front(); }
  int b() const { return vertices.back(); }
};

struct EarDecomposition {
  BaseShape base;
  std::vector<Ear> ears;  // ear i is piece i+1; the base is piece 0

  int piece_count() const { return static_cast<int>(ears.size()) + 1; }
  std::vector<int> base_vertices() const;
  std::vector<std::pair<int, int>> base_edge_pairs() const;
  // Vertices of piece idx (0 = base).
  std::vector<int> piece_vertices(int idx) const;
  // Interior of piece idx; for the base this is its whole vertex set.
  std::vector<int> piece_internals(int idx) const;
  // True when both ends of earndx (1-based piece index) lie on the base.
  bool ear_on_base(int idx) const;
};

// Throws InvariantError unless the decomposition is structurally sound for
// g: the base embeds with its declared shape, every ear attaches to earlier
// pieces with fresh interior vertices, and the pieces cover E(g) exactly.
void validate_decomposition(const Graph& g, const EarDecomposition& d);

// Open ear decomposition of 2-connected g grown from the given cycle
// (deterministic scan order). The base variant follows the cycle's parity.
EarDecomposition ear_decompose_from(const Graph& g,
                                    std::span<const int> cycle);

// Decomposition whose base suits the order and bipartiteness of g:
// any cycle for even order, an odd cycle for odd nonbipartite order, and a
// three-route or umbrella base for odd bipartite order (with every
// base-attached ear's ends inside a single route in the three-route case).
// Throws StructureError unless g is 2-connected with at least 3 vertices.
EarDecomposition normalize(const Graph& g);

// Connecting path between the ends of piece j inside piece i, when the
// shape rules define one.
struct FPath {
  bool defined = false;
  std::vector<int> vertices;
  int size() const { return static_cast<int>(vertices.size()) - 1; }
};

// 0 <= i < j <= t over piece indices; ContractError outside that range.
FPath f_path(const Graph& g, const EarDecomposition& d, int i, int j);

struct CheckIssue {
  std::string what;
  std::vector<int> pieces;  // piece indices involved
};
struct CheckResult {
  bool pass = true;
  std::vector<CheckIssue> issues;
};

// Base-shape conditions for the half-order criterion.
CheckResult check_standard(const Graph& g, const EarDecomposition& d);
// Nesting discipline: an ear whose end touches a piece's interior has both
// ends on that piece, and ends inside a connecting path refine it properly.
CheckResult check_qr(const Graph& g, const EarDecomposition& d);
// Every ear has odd size and every defined connecting path has odd size.
CheckResult check_parity(const Graph& g, const EarDecomposition& d);

struct DependencyAnalysis {
  std::vector<int> least_container;  // per piece; -1 for the base / undefined
  std::vector<int> depth;            // shortest arc distance from the base
  std::vector<int> deepest;          // piece indices at maximum depth
  int r = -1;                        // selected deepest piece
  int l = -1;                        // its least container
  FPath f;                           // f_path(l, r)
};

// Builds the definedness digraph over pieces, picks the deepest piece with
// the shortest connecting path (single-edge ears first, then least index),
// and asserts that the interiors of that ear and of its connecting path
// have degree 2 in g (InvariantError otherwise). Requires at least one ear.
DependencyAnalysis dependency_analysis(const Graph& g,
                                       const EarDecomposition& d);

// Attempts to build a verified coloring with floor(n/2) classes following
// the decomposition's reduction order. Returns nothing when the recipe does
// not go through; *why (optional) then carries the first obstruction.
std::optional<EdgeColoring> construct_half_coloring(
    const Graph& g, const EarDecomposition& d, std::string* why = nullptr);

struct DecisionReport {
  bool verdict = false;
  EarDecomposition decomposition;
  CheckResult standard;
  CheckResult qr;
  CheckResult parity;
  std::optional<EdgeColoring> certificate;  // verified iff verdict
  // Nonempty when the structural checks pass but no certificate could be
  // built (or the built coloring failed verification): the checks and the
  // certificate disagree and the verdict falls back to the certificate.
  std::string anomaly;

  bool checks_passed() const {
    return standard.pass && qr.pass && parity.pass;
  }
};

// Decides whether md(g) equals floor(n/2) for 2-connected g. The verdict is
// affirmative exactly when all structural checks pass AND a verified
// floor(n/2)-class certificate was constructed. Throws StructureError for
// graphs that are not 2-connected on at least 3 vertices.
DecisionReport decide_half(const Graph& g);

}  // namespace md
