#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ebi {

/// Undirected edge stored with canonical orientation u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph over dense vertex indices 0..p-1.
///
/// Edges are kept sorted lexicographically with u < v, so every edge has a
/// stable canonical index in 0..q-1. Instances are immutable after
/// construction and safe to share across threads.
class Graph {
  public:
    Graph() = default;

    /// Normalizes endpoint order, sorts, and validates: endpoints must be in
    /// range, self-loops and duplicate edges are rejected.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge at a canonical index; throws std::out_of_range.
    Edge edge(int index) const;

    /// Canonical index of the edge {u, v} in either endpoint order, or
    /// nullopt when the pair is not an edge.
    std::optional<int> edge_index(int u, int v) const;

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;

    /// Common degree r when the graph is r-regular, nullopt otherwise
    /// (including the vertex-free graph).
    std::optional<int> regularity() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

  private:
    void check_vertex(int v) const;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_offsets_;  // CSR layout of the adjacency lists
    std::vector<int> adj_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Convenience wrapper for handing a graph to labeling-producing calls.
GraphPtr share(Graph g);

Graph complete_graph(int n);                 // K_n, n >= 1
Graph complete_bipartite(int m, int n);      // parts {0..m-1} and {m..m+n-1}
Graph path_graph(int n);                     // P_n, n >= 1
Graph cycle_graph(int n);                    // C_n, n >= 3

/// K_{n,n} minus a perfect matching, n >= 2: vertices a_i = i and b_j = n+j
/// with an edge (a_i, b_j) exactly when i != j.
Graph crown_graph(int n);

/// Image of g under a permutation of the vertex indices (perm[old] = new).
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Parses the edge-list text format: optional '#' comments, first data line
/// is the vertex count, every further data line is "u v". Errors carry
/// 1-based line numbers.
Graph from_edge_list(std::string_view text);

/// Writes the same format with edges in canonical order.
std::string to_edge_list(const Graph& g);

}  // namespace ebi
