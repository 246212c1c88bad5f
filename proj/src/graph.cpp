#include "ebi/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ebi {

namespace {

std::string edge_str(int u, int v) {
    return std::to_string(u) + " " + std::to_string(v);
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= vertex_count_)
            throw std::invalid_argument("Graph: edge " + edge_str(e.u, e.v) +
                                        " out of range for vertex count " +
                                        std::to_string(vertex_count_));
        if (e.u == e.v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge " + edge_str(dup->u, dup->v));

    std::vector<int> degree(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    adj_offsets_.assign(vertex_count_ + 1, 0);
    for (int v = 0; v < vertex_count_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + degree[v];
    adj_.resize(adj_offsets_[vertex_count_]);
    std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[cursor[e.u]++] = e.v;
        adj_[cursor[e.v]++] = e.u;
    }
    for (int v = 0; v < vertex_count_; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
}

Edge Graph::edge(int index) const {
    if (index < 0 || index >= edge_count())
        throw std::out_of_range("Graph::edge: index " + std::to_string(index));
    return edges_[index];
}

std::optional<int> Graph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    Edge needle{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), needle);
    if (it == edges_.end() || *it != needle) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + adj_offsets_[v],
            static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::optional<int> Graph::regularity() const {
    if (vertex_count_ == 0) return std::nullopt;
    int r = degree(0);
    for (int v = 1; v < vertex_count_; ++v)
        if (degree(v) != r) return std::nullopt;
    return r;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: parts must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.push_back({u, m + v});
    return Graph(m + n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph crown_graph(int n) {
    if (n < 2) throw std::invalid_argument("crown_graph: n must be >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.push_back({i, n + j});
    return Graph(2 * n, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int p = g.vertex_count();
    if (static_cast<int>(perm.size()) != p)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<bool> seen(p, false);
    for (int img : perm) {
        if (img < 0 || img >= p || seen[img])
            throw std::invalid_argument("relabel: not a permutation");
        seen[img] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(p, std::move(edges));
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_count = false;
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;

    auto fail = [&](const std::string& what) {
        throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!have_count) {
            int n;
            if (!(fields >> n)) {
                if (fields.eof()) continue;  // blank or comment-only line
                fail("expected vertex count");
            }
            std::string rest;
            if (fields >> rest) fail("trailing data after vertex count");
            if (n < 0) fail("negative vertex count");
            vertex_count = n;
            have_count = true;
            continue;
        }
        int u, v;
        if (!(fields >> u)) {
            if (fields.eof()) continue;
            fail("malformed edge line");
        }
        if (!(fields >> v)) fail("malformed edge line (expected \"u v\")");
        std::string rest;
        if (fields >> rest) fail("trailing data after edge");
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            fail("vertex out of range: " + edge_str(u, v));
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == Edge{u, v})
                fail("duplicate edge " + edge_str(u, v) + " (first seen on line " +
                     std::to_string(edge_lines[i]) + ")");
        edges.push_back({u, v});
        edge_lines.push_back(line_no);
    }
    if (!have_count) throw std::runtime_error("edge list: missing vertex count line");
    return Graph(vertex_count, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges()) out += edge_str(e.u, e.v) + "\n";
    return out;
}

}  // namespace ebi
