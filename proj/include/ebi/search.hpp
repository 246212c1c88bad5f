#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ebi/labeling.hpp"

namespace ebi {

struct SearchOptions {
    /// Maximum number of labelings to visit before reporting a truncated
    /// result.
    std::uint64_t budget = 200'000'000;
    /// Worker threads. The rank space is split into contiguous colex ranges,
    /// one per worker, so results are identical for any job count.
    unsigned jobs = 1;
    /// Optional side channel: incremented in batches as labelings are
    /// visited, for progress reporting.
    std::atomic<std::uint64_t>* progress = nullptr;
};

/// Streams every edge labeling with exactly ceil(q/2) 1-edges, in colex
/// order over the 1-edge subsets. For even q these are exactly the
/// edge-friendly labelings up to nothing; for odd q the remaining
/// edge-friendly labelings are the complements of the streamed ones, and
/// every complement-invariant quantity is covered by this half.
class EdgeFriendlyEnumerator {
  public:
    explicit EdgeFriendlyEnumerator(GraphPtr graph);
    EdgeFriendlyEnumerator(GraphPtr graph, std::uint64_t begin_rank, std::uint64_t end_rank);

    std::uint64_t total() const { return total_; }
    std::optional<EdgeLabeling> next();

    /// Non-empty when there is nothing to enumerate (edgeless graph).
    const std::string& diagnostic() const { return diagnostic_; }

  private:
    GraphPtr graph_;
    std::uint64_t total_ = 0;
    std::uint64_t rank_ = 0;
    std::uint64_t end_ = 0;
    std::uint64_t mask_ = 0;
    std::string diagnostic_;
};

struct EbiReport {
    int p = 0;
    int q = 0;
    std::optional<int> regularity;
    bool complete = false;
    std::uint64_t enumerated = 0;
    std::vector<int> index_set;          // ascending
    std::map<int, EdgeLabeling> witnesses;  // first labeling seen per index
    std::map<int, std::uint64_t> histogram; // visits per index over the enumerated half
};

/// Exhaustive edge-balanced index set of a graph with 1 <= q <= 64.
/// Deterministic for any job count; a report that ran into the budget is
/// flagged complete = false and covers a colex prefix of the space.
EbiReport compute_ebi(GraphPtr graph, const SearchOptions& options = {});

enum class BalancedStatus { found, absent, inconclusive };

struct BalancedSearchResult {
    BalancedStatus status = BalancedStatus::absent;
    std::optional<EdgeLabeling> labeling;  // set when status == found
    std::uint64_t enumerated = 0;
};

/// First (in colex order) labeling with e0 = e1 and v0 = v1, if any.
/// Odd q makes e0 = e1 impossible: absent without enumeration. Running out
/// of budget before exhausting the space yields inconclusive, which is
/// distinct from a proven absent.
BalancedSearchResult find_strongly_edge_balanced(GraphPtr graph,
                                                const SearchOptions& options = {});

struct MaxIndexResult {
    int index = 0;
    EdgeLabeling witness;
    bool complete = false;
};

/// Largest achieved index with a witness, via compute_ebi.
MaxIndexResult max_index_search(GraphPtr graph, const SearchOptions& options = {});

}  // namespace ebi
