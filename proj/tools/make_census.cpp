// Generates isomorphism-free censuses of small connected graphs as
// graph6 files, one per order, by levelwise vertex extension with
// canonical-form deduplication.

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "md/graph.hpp"
#include "md/graph6.hpp"

namespace {

using Mask = std::uint32_t;  // colex upper-triangle bits, enough for n <= 8

constexpr int kMaxOrder = 8;

int pair_index(int i, int j) {  // requires i < j
  return j * (j - 1) / 2 + i;
}

std::array<Mask, kMaxOrder> adjacency_rows(Mask m, int n) {
  std::array<Mask, kMaxOrder> adj{};
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (m >> pair_index(i, j) & 1) {
        adj[i] |= Mask{1} << j;
        adj[j] |= Mask{1} << i;
      }
    }
  }
  return adj;
}

bool connected(Mask m, int n) {
  auto adj = adjacency_rows(m, n);
  Mask seen = 1;
  Mask frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier >> v & 1) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (Mask{1} << n) - 1;
}

// Finds the vertex order whose block-by-block adjacency reading (each new
// position listing its adjacencies to earlier ones, earlier placements
// more significant) is smallest, and re-encodes the graph along that
// order in colex layout. Equal results exactly on isomorphic graphs.
class Canonicalizer {
 public:
  Mask run(Mask m, int n) {
    n_ = n;
    adj_ = adjacency_rows(m, n);
    total_ = n * (n - 1) / 2;
    best_ = total_ < 32 ? (Mask{1} << total_) - 1 : ~Mask{0};
    found_ = false;
    descend(0, 0, 0);
    Mask out = 0;
    for (int k = 1; k < n_; ++k) {
      for (int t = 0; t < k; ++t) {
        if (adj_[best_order_[t]] >> best_order_[k] & 1) {
          out |= Mask{1} << pair_index(t, k);
        }
      }
    }
    return out;
  }

 private:
  void descend(int depth, Mask used, Mask prefix) {
    if (depth == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        found_ = true;
      }
      return;
    }
    int width = depth * (depth + 1) / 2;
    for (int w = 0; w < n_; ++w) {
      if (used >> w & 1) continue;
      Mask block = 0;
      for (int t = 0; t < depth; ++t) {
        block = block << 1 | (adj_[order_[t]] >> w & 1);
      }
      Mask partial = prefix << depth | block;
      if (partial > best_ >> (total_ - width)) continue;
      order_[depth] = w;
      descend(depth + 1, used | Mask{1} << w, partial);
    }
  }

  int n_ = 0;
  int total_ = 0;
  Mask best_ = 0;
  bool found_ = false;
  std::array<Mask, kMaxOrder> adj_{};
  std::array<int, kMaxOrder> order_{};
  std::array<int, kMaxOrder> best_order_{};
};

md::Graph to_graph(Mask m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (m >> pair_index(i, j) & 1) edges.emplace_back(i, j);
    }
  }
  return md::Graph(n, edges);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small-graph census generator"};
  std::string out_dir = "data/census";
  int max_order = kMaxOrder;
  app.add_option("--out", out_dir, "output directory")
      ->capture_default_str();
  app.add_option("--max-order", max_order, "largest order to emit")
      ->check(CLI::Range(2, kMaxOrder))
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  // All graphs per order up to isomorphism, grown one vertex at a time.
  // In colex layout the parent's bits are a prefix of the child's, so an
  // extension is the parent mask plus a neighborhood block on top.
  std::vector<std::set<Mask>> levels(max_order + 1);
  levels[1] = {0};
  Canonicalizer canon;
  for (int n = 2; n <= max_order; ++n) {
    int shift = (n - 1) * (n - 2) / 2;
    for (Mask parent : levels[n - 1]) {
      for (Mask nb = 0; nb < Mask{1} << (n - 1); ++nb) {
        levels[n].insert(canon.run(parent | nb << shift, n));
      }
    }
  }

  // Counts of graphs (all / connected) per order; generation bugs would
  // almost surely disturb these, so mismatches abort the run.
  const std::vector<std::size_t> all_expected = {0,    1,    2,    4,   11,
                                                 34,   156,  1044, 12346};
  const std::vector<std::size_t> conn_expected = {0,   1,   1,   2,    6,
                                                  21,  112, 853, 11117};

  std::filesystem::create_directories(out_dir);
  bool ok = true;
  for (int n = 2; n <= max_order; ++n) {
    std::vector<std::string> lines;
    for (Mask m : levels[n]) {
      if (connected(m, n)) lines.push_back(md::encode_graph6(to_graph(m, n)));
    }
    std::sort(lines.begin(), lines.end());
    if (levels[n].size() != all_expected[n] ||
        lines.size() != conn_expected[n]) {
      std::cerr << "order " << n << ": got " << levels[n].size() << " graphs, "
                << lines.size() << " connected; expected " << all_expected[n]
                << " / " << conn_expected[n] << "\n";
      ok = false;
    }
    std::filesystem::path file =
        std::filesystem::path(out_dir) / ("connected_" + std::to_string(n) +
                                          ".g6");
    std::ofstream out(file);
    for (const std::string& line : lines) out << line << "\n";
    std::cout << file.string() << ": " << lines.size() << " graphs\n";
  }
  return ok ? 0 : 1;
}
