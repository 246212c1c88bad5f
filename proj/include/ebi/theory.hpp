#pragma once

#include <cstdint>
#include <optional>

#include "ebi/graph.hpp"

namespace ebi {

/// Upper bound on the largest edge-balanced index an r-regular graph of the
/// given even order can attain when r is odd, kept as an exact rational.
struct RegularBound {
    int order = 0;
    int regularity = 0;
    std::int64_t numerator = 0;    // bound = numerator / denominator
    std::int64_t denominator = 1;
    std::int64_t floor_value = 0;
};

/// Bound for odd regularity r on n vertices:
///   (r-1)n / (r+1)        when n % 4 == 0
///   ((r-1)n + 4) / (r+1)  when n % 4 == 2
/// Returns nullopt for even r (no bound of this form); throws
/// std::domain_error for odd r with odd n (no such graph exists).
std::optional<RegularBound> lemma3_bound(int order, int regularity);

bool all_degrees_odd(const Graph& g);

/// Parity conditions tied to strongly edge-balanced cartesian and
/// lexicographic products. any_holds is their disjunction; when a product
/// G1 [] G2 or G1[G2] admits a strongly edge-balanced labeling, at least one
/// condition must hold for the factor pair.
struct ParityConditions {
    bool orders_both_even = false;    // p(G1), p(G2) even
    bool sizes_both_even = false;     // q(G1), q(G2) even
    bool first_order_size_even = false;   // p(G1), q(G1) even
    bool second_order_size_even = false;  // p(G2), q(G2) even
    bool all_four_odd = false;        // p(G1), q(G1), p(G2), q(G2) all odd
    bool any_holds = false;
};

ParityConditions theorem3_conditions(const Graph& g1, const Graph& g2);

}  // namespace ebi
