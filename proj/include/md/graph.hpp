#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace md {

using EdgeId = int;

// Simple undirected graph with dense vertex ids 0..n-1 and stable edge ids
// 0..m-1 in insertion order. Immutable after construction.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::span<const std::pair<int, int>> edges);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(EdgeId e) const { return edges_[e]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<EdgeId>& incident_edges(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    std::optional<EdgeId> edge_id(int u, int v) const;

    bool is_connected() const;
    // Component label per vertex, labels dense in discovery order.
    std::vector<int> component_labels() const;
    // Same, for the graph with the flagged edges removed.
    std::vector<int> component_labels_without(const std::vector<char>& removed_edge) const;
    // BFS distances from source; unreachable vertices get -1.
    std::vector<int> bfs_distances(int source) const;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<EdgeId>> inc_;
};

// A subgraph together with the maps back into its parent.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_to_parent;
    std::vector<EdgeId> edge_to_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

}  // namespace md
