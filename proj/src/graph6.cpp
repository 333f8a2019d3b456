#include "md/graph6.hpp"

#include <utility>
#include <vector>

#include "md/errors.hpp"

namespace md {

namespace {

constexpr char kPrefix[] = ">>graph6<<";

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::size_t begin = 0;
  if (text.rfind(kPrefix, 0) == 0) begin = sizeof(kPrefix) - 1;
  std::size_t end = text.size();
  while (end > begin && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                         text[end - 1] == ' ' || text[end - 1] == '\t')) {
    --end;
  }
  if (end == begin) throw ParseError("graph6: empty input", 0);

  const char head = text[begin];
  if (head == '~') {
    throw ParseError("graph6: long-form order not supported (n > 62)", begin);
  }
  if (head < 63 || head > 125) {
    throw ParseError("graph6: invalid order byte", begin);
  }
  const int n = head - 63;

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t data_bytes = (pairs + 5) / 6;
  if (end - begin - 1 != data_bytes) {
    throw ParseError("graph6: wrong payload length for order " +
                         std::to_string(n),
                     begin + 1);
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const std::size_t byte_idx = begin + 1 + bit / 6;
      const char c = text[byte_idx];
      if (c < 63 || c > 126) {
        throw ParseError("graph6: invalid payload byte", byte_idx);
      }
      const int chunk = c - 63;
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits beyond the last pair must be zero; tolerate them silently
  // only if zero.
  for (std::size_t b = pairs; b < data_bytes * 6; ++b) {
    const std::size_t byte_idx = begin + 1 + b / 6;
    const int chunk = text[byte_idx] - 63;
    if ((chunk >> (5 - b % 6)) & 1) {
      throw ParseError("graph6: nonzero padding bit", byte_idx);
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  if (n > 62) {
    throw ContractError("graph6 encoding supports at most 62 vertices");
  }
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t data_bytes = (pairs + 5) / 6;
  std::vector<int> chunks(data_bytes, 0);
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.has_edge(u, v)) chunks[bit / 6] |= 1 << (5 - bit % 6);
    }
  }
  for (int chunk : chunks) out.push_back(static_cast<char>(63 + chunk));
  return out;
}

}  // namespace md
