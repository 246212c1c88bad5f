#include "ebi/products.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ebi {

namespace {

void check_size(const char* name, const Graph& made, std::int64_t expected) {
    if (made.edge_count() != expected)
        throw std::logic_error(std::string(name) + ": size identity violated (got " +
                               std::to_string(made.edge_count()) + ", expected " +
                               std::to_string(expected) + ")");
}

}  // namespace

Graph lexicographic_product(const Graph& g1, const Graph& g2) {
    const int p1 = g1.vertex_count(), p2 = g2.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g1.edges())
        for (int v1 = 0; v1 < p2; ++v1)
            for (int v2 = 0; v2 < p2; ++v2)
                edges.push_back({e.u * p2 + v1, e.v * p2 + v2});
    for (int u = 0; u < p1; ++u)
        for (const Edge& e : g2.edges())
            edges.push_back({u * p2 + e.u, u * p2 + e.v});
    Graph out(p1 * p2, std::move(edges));
    check_size("lexicographic_product", out,
               std::int64_t(p2) * p2 * g1.edge_count() + std::int64_t(p1) * g2.edge_count());
    return out;
}

Graph direct_product(const Graph& g1, const Graph& g2) {
    const int p2 = g2.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e1 : g1.edges())
        for (const Edge& e2 : g2.edges()) {
            edges.push_back({e1.u * p2 + e2.u, e1.v * p2 + e2.v});
            edges.push_back({e1.u * p2 + e2.v, e1.v * p2 + e2.u});
        }
    Graph out(g1.vertex_count() * p2, std::move(edges));
    check_size("direct_product", out, 2 * std::int64_t(g1.edge_count()) * g2.edge_count());
    return out;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int p1 = g1.vertex_count(), p2 = g2.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g1.edges())
        for (int v = 0; v < p2; ++v) edges.push_back({e.u * p2 + v, e.v * p2 + v});
    for (int u = 0; u < p1; ++u)
        for (const Edge& e : g2.edges())
            edges.push_back({u * p2 + e.u, u * p2 + e.v});
    Graph out(p1 * p2, std::move(edges));
    check_size("cartesian_product", out,
               std::int64_t(p2) * g1.edge_count() + std::int64_t(p1) * g2.edge_count());
    return out;
}

}  // namespace ebi
