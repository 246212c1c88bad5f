#pragma once

#include <cstdint>

namespace ebi {

/// Exact binomial coefficient for n <= 64 (every such value fits in 64 bits).
/// Returns 0 when k > n; throws std::invalid_argument when n > 64.
std::uint64_t binomial(unsigned n, unsigned k);

/// Bitmask of the rank-th k-subset of {0..n-1} in colexicographic order.
/// Colex order on fixed-popcount masks coincides with ascending numeric order.
std::uint64_t colex_unrank(unsigned n, unsigned k, std::uint64_t rank);

/// Colex rank of a fixed-popcount mask (inverse of colex_unrank).
std::uint64_t colex_rank(std::uint64_t mask);

/// Next mask with the same popcount in ascending numeric order (Gosper's hack).
/// Must not be called on the last combination of a 64-bit universe.
std::uint64_t next_same_popcount(std::uint64_t mask);

}  // namespace ebi
