#include "md/product.hpp"

#include "md/errors.hpp"

namespace md {

ProductGraph cartesian_product(const Graph& left, const Graph& right) {
  if (left.n() == 0 || right.n() == 0) {
    throw ContractError("product factors must be nonempty");
  }
  ProductGraph p;
  const int rn = right.n();
  auto index = [rn](int u, int v) { return u * rn + v; };
  for (int u = 0; u < left.n(); ++u) {
    for (int v = 0; v < rn; ++v) p.vertex_labels.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < rn; ++v) {
    for (EdgeId e = 0; e < left.m(); ++e) {
      const auto [a, b] = left.edge(e);
      edges.emplace_back(index(a, v), index(b, v));
      p.edge_origin.emplace_back(0, e);
    }
  }
  for (int u = 0; u < left.n(); ++u) {
    for (EdgeId e = 0; e < right.m(); ++e) {
      const auto [c, d] = right.edge(e);
      edges.emplace_back(index(u, c), index(u, d));
      p.edge_origin.emplace_back(1, e);
    }
  }
  p.graph = Graph(left.n() * rn, edges);
  return p;
}

}  // namespace md
