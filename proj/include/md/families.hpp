#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "md/coloring.hpp"
#include "md/graph.hpp"

namespace md {

struct FamilySpec;
using FamilySpecPtr = std::shared_ptr<const FamilySpec>;

// Parameter records for the supported graph families.
struct CycleSpec { int n = 0; };
struct CompleteSpec { int n = 0; };
struct PathSpec { int n = 0; };
struct CompleteBipartiteSpec { int s = 0; int t = 0; };
struct TreeSpec { std::vector<std::pair<int, int>> edges; };
struct ProductSpec { FamilySpecPtr left; FamilySpecPtr right; };
struct JoinSpec { FamilySpecPtr base; };
// Two near-half cliques joined by a perfect matching between them; for odd n an
// optional matching inside the matched part of the larger clique may be removed.
// `removed` uses 1-based clique positions.
struct AFamilySpec { int n = 0; std::vector<std::pair<int, int>> removed; };
// Cycle plus >= 3 internally disjoint paths (spokes) from an external apex to
// the cycle; spoke sizes must be odd, rim sizes even.
struct UmbrellaSpec { std::vector<int> spokes; std::vector<int> rims; };
// Three internally disjoint even paths (routes) sharing both ends.
struct ThetaSpec { int a = 0; int b = 0; int c = 0; };
// r internally disjoint odd paths sharing both ends; path i has size 2*k_i + 1.
struct MultiPathSpec { std::vector<int> halves; };
// Box product of a complete graph K_r with a path on k vertices.
struct KrBoxPathSpec { int r = 0; int k = 0; };

struct FamilySpec {
  std::variant<CycleSpec, CompleteSpec, PathSpec, CompleteBipartiteSpec,
               TreeSpec, ProductSpec, JoinSpec, AFamilySpec, UmbrellaSpec,
               ThetaSpec, MultiPathSpec, KrBoxPathSpec>
      value;
};

// A graph paired with a coloring that witnesses claimed_md. Every constructor
// in this module verifies the coloring before returning, so claimed_md can be
// trusted downstream: the coloring always separates all pairs and uses exactly
// claimed_md colors.
struct CertifiedGraph {
  Graph graph;
  EdgeColoring coloring;
  int claimed_md = 0;
  std::string provenance;  // names the construction rule behind claimed_md
};

// Cycle / Complete / Path / Tree / CompleteBipartite / Join specs only.
CertifiedGraph gen_basic(const FamilySpec& spec);

// Box product with factor-wise colors on disjoint palettes;
// claimed_md = a.claimed_md + b.claimed_md.
CertifiedGraph product_coloring(const CertifiedGraph& a,
                                const CertifiedGraph& b);

CertifiedGraph gen_A_family(int n,
                            std::span<const std::pair<int, int>> removed = {});

CertifiedGraph gen_umbrella(std::span<const int> spokes,
                            std::span<const int> rims);

CertifiedGraph gen_theta(int a, int b, int c);

CertifiedGraph gen_multipath(std::span<const int> halves);

// Replace edge e by a path of size t (t >= 1; t == 1 is the identity).
// Interior colors mirror outside-in with fresh colors and the middle edge(s)
// inherit the color of e; claimed_md grows by floor((t-1)/2).
CertifiedGraph path_replace_lift(const CertifiedGraph& cg, EdgeId e, int t);

// Add an edge between a nonadjacent pair separated by exactly one color; the
// new edge receives that color and claimed_md is unchanged.
CertifiedGraph add_edge_lift(const CertifiedGraph& cg, int u, int v);

// Grammar: name[:args] or name(spec,...). Examples: "cycle:6",
// "biclique:2,3", "tree:0-1,1-2", "product(complete:3,path:4)",
// "join(path:3)", "afamily:9;1-2", "umbrella:1,1,1;2,2,2", "theta:2,2,4",
// "multipath:1,1,1", "krboxpath:3,4".
FamilySpec parse_family_spec(std::string_view text);

// Dispatch any spec to its generator.
CertifiedGraph generate(const FamilySpec& spec);

}  // namespace md
