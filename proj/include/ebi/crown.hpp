#pragma once

#include <vector>

#include "ebi/labeling.hpp"

namespace ebi {

/// One schedule step: the labels of these two edges (canonical indices) are
/// exchanged. The first must be a 0-edge and the second a 1-edge at the
/// moment the step is applied.
struct SwitchPair {
    int zero_edge = 0;
    int one_edge = 0;
};

/// A maximum-index labeling of a crown graph together with a sequence of
/// swaps that lowers the index by a fixed amount per step until it reaches 0.
struct SwitchSchedule {
    EdgeLabeling start;
    std::vector<SwitchPair> steps;
    int step_delta = 0;  // 2 for even n, 1 for odd n
};

/// Every index attained by some edge-friendly labeling of crown(n):
/// {0} for n = 3, {0, 2, ..., 2n-4} for even n >= 4,
/// {0, 1, ..., 2n-8} for odd n >= 5. Requires n >= 3.
std::vector<int> ebi_formula(int n);

/// Extremal labeling of crown(n) for even n >= 4, with index 2n-4: vertices
/// a_0 and b_0 see only 0-edges, every other vertex is majority-one.
EdgeLabeling max_labeling_even(int n);

/// Extremal labeling of crown(n) for odd n >= 7, with index 2n-8: the four
/// vertices a_0, a_1, b_0, b_1 are majority-zero, the rest majority-one.
/// n = 5 admits no labeling of this shape and is rejected.
EdgeLabeling max_labeling_odd(int n);

SwitchSchedule switch_schedule_even(int n);  // n even >= 4, n-2 steps of delta 2
SwitchSchedule switch_schedule_odd(int n);   // n odd >= 7, 2n-8 steps of delta 1

/// Witness labeling of crown(n) with index exactly k. For n >= 4 even and
/// n >= 7 odd this is a schedule prefix applied to the max labeling; n = 3
/// and n = 5 come from built-in witness tables. Throws std::domain_error
/// when k is not an attainable index for crown(n).
EdgeLabeling labeling_for_index(int n, int k);

struct ReplayResult {
    std::vector<EdgeLabeling> states;  // steps + 1 entries, starting state first
    std::vector<int> indices;          // index of each state
};

/// Applies a schedule step by step, validating the swap precondition and
/// edge-friendliness of every intermediate state. Throws std::runtime_error
/// with the failing step's position and edges on any violation.
ReplayResult replay(const SwitchSchedule& schedule);

}  // namespace ebi
