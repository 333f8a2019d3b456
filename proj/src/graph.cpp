#include "md/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "md/errors.hpp"

namespace md {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw ContractError("vertex count must be non-negative");
    adj_.resize(n_);
    inc_.resize(n_);
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw ContractError("self loop at vertex " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw ContractError("duplicate edge " + std::to_string(key.first) + "-" +
                                std::to_string(key.second));
        EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.emplace_back(key.first, key.second);
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        inc_[a].push_back(id);
        inc_[b].push_back(id);
    }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, std::span<const std::pair<int, int>>(edges));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw ContractError("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    return edge_id(u, v).has_value();
}

std::optional<EdgeId> Graph::edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (degree(u) > degree(v)) std::swap(u, v);
    for (std::size_t i = 0; i < adj_[u].size(); ++i)
        if (adj_[u][i] == v) return inc_[u][i];
    return std::nullopt;
}

std::vector<int> Graph::component_labels() const {
    return component_labels_without(std::vector<char>(edges_.size(), 0));
}

std::vector<int> Graph::component_labels_without(const std::vector<char>& removed_edge) const {
    if (static_cast<int>(removed_edge.size()) != m())
        throw ContractError("removed-edge mask size mismatch");
    std::vector<int> label(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < adj_[v].size(); ++i) {
                if (removed_edge[inc_[v][i]]) continue;
                int w = adj_[v][i];
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto label = component_labels();
    return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

std::vector<int> Graph::bfs_distances(int source) const {
    check_vertex(source);
    std::vector<int> dist(n_, -1);
    dist[source] = 0;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : adj_[v]) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> index(g.n(), -1);
    Subgraph sub;
    for (int v : vertices) {
        if (v < 0 || v >= g.n()) throw ContractError("vertex out of range in induced_subgraph");
        if (index[v] != -1) throw ContractError("repeated vertex in induced_subgraph");
        index[v] = static_cast<int>(sub.vertex_to_parent.size());
        sub.vertex_to_parent.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        if (index[a] != -1 && index[b] != -1) {
            edges.emplace_back(index[a], index[b]);
            sub.edge_to_parent.push_back(e);
        }
    }
    sub.graph = Graph::from_edges(static_cast<int>(sub.vertex_to_parent.size()), edges);
    return sub;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<int> index(g.n(), -1);
    Subgraph sub;
    std::vector<std::pair<int, int>> mapped;
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.m()) throw ContractError("edge id out of range in edge_subgraph");
        auto [a, b] = g.edge(e);
        for (int v : {a, b}) {
            if (index[v] == -1) {
                index[v] = static_cast<int>(sub.vertex_to_parent.size());
                sub.vertex_to_parent.push_back(v);
            }
        }
        mapped.emplace_back(index[a], index[b]);
        sub.edge_to_parent.push_back(e);
    }
    sub.graph = Graph::from_edges(static_cast<int>(sub.vertex_to_parent.size()), mapped);
    return sub;
}

}  // namespace md
