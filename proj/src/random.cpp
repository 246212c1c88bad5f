#include "ebi/random.hpp"

#include <stdexcept>
#include <utility>

namespace ebi {

std::uint64_t Rng::bounded(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::bounded: empty range");
    // Largest multiple of n that fits; draws past it would bias the result.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return draw % n;
}

Graph random_graph(Rng& rng, int vertex_count) {
    if (vertex_count < 1)
        throw std::invalid_argument("random_graph: need at least one vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v)
            if (rng.coin()) edges.push_back({u, v});
    return Graph(vertex_count, std::move(edges));
}

EdgeLabeling random_edge_friendly(Rng& rng, GraphPtr graph) {
    int q = graph->edge_count();
    int ones = q / 2;
    if (q % 2 == 1 && rng.coin()) ones = q / 2 + 1;
    // Partial Fisher-Yates: after `ones` swap steps the front of `pool`
    // is a uniform subset of the edge indices.
    std::vector<int> pool(q);
    for (int i = 0; i < q; ++i) pool[i] = i;
    std::vector<std::uint8_t> labels(q, 0);
    for (int i = 0; i < ones; ++i) {
        int j = i + static_cast<int>(rng.bounded(q - i));
        std::swap(pool[i], pool[j]);
        labels[pool[i]] = 1;
    }
    return EdgeLabeling(std::move(graph), std::move(labels));
}

}  // namespace ebi
