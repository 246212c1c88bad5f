#pragma once

#include <cstdint>
#include <random>

#include "ebi/graph.hpp"
#include "ebi/labeling.hpp"

namespace ebi {

/// Seeded generator with a platform-independent uniform range draw, so
/// that a seed printed in one report reproduces the same run everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, n), n >= 1, by rejection.
    std::uint64_t bounded(std::uint64_t n);

    bool coin() { return (next() & 1) != 0; }

  private:
    std::mt19937_64 engine_;
};

/// Uniform-ish random simple graph: each of the C(p, 2) vertex pairs is an
/// edge with probability 1/2.
Graph random_graph(Rng& rng, int vertex_count);

/// Uniform random edge-friendly labeling: the number of 1-edges is q/2 for
/// even q, and a fair coin between (q-1)/2 and (q+1)/2 for odd q; the
/// 1-edge positions are a uniform subset of that size.
EdgeLabeling random_edge_friendly(Rng& rng, GraphPtr graph);

}  // namespace ebi
