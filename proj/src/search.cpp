#include "ebi/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "ebi/subsets.hpp"

namespace ebi {

namespace {

constexpr std::uint64_t kProgressBatch = 1u << 20;

// Per-vertex incidence bitmasks over canonical edge indices; the induced
// label of v under mask m is decided by popcount(m & incidence[v]) against
// degree[v].
struct IncidenceTable {
    int p = 0;
    int q = 0;
    unsigned ones = 0;       // 1-edges per labeling: ceil(q/2)
    std::uint64_t total = 0; // binomial(q, ones)
    std::vector<std::uint64_t> incidence;
    std::vector<int> degree;
};

IncidenceTable make_table(const Graph& g) {
    if (g.edge_count() > 64)
        throw std::invalid_argument(
            "enumeration supports at most 64 edges; graph has " +
            std::to_string(g.edge_count()));
    IncidenceTable t;
    t.p = g.vertex_count();
    t.q = g.edge_count();
    t.ones = static_cast<unsigned>((t.q + 1) / 2);
    t.total = t.q == 0 ? 0 : binomial(static_cast<unsigned>(t.q), t.ones);
    t.incidence.assign(t.p, 0);
    t.degree.assign(t.p, 0);
    for (int i = 0; i < t.q; ++i) {
        Edge e = g.edge(i);
        t.incidence[e.u] |= std::uint64_t{1} << i;
        t.incidence[e.v] |= std::uint64_t{1} << i;
        ++t.degree[e.u];
        ++t.degree[e.v];
    }
    return t;
}

int index_of_mask(const IncidenceTable& t, std::uint64_t mask) {
    int v0 = 0, v1 = 0;
    for (int v = 0; v < t.p; ++v) {
        int twice = 2 * std::popcount(mask & t.incidence[v]);
        v0 += twice < t.degree[v];
        v1 += twice > t.degree[v];
    }
    return std::abs(v0 - v1);
}

struct RangeResult {
    std::vector<std::uint64_t> histogram;   // by index, size p+1
    std::vector<std::uint64_t> first_mask;  // valid where histogram > 0
};

RangeResult scan_range(const IncidenceTable& t, std::uint64_t lo, std::uint64_t hi,
                       std::atomic<std::uint64_t>* progress) {
    RangeResult r;
    r.histogram.assign(t.p + 1, 0);
    r.first_mask.assign(t.p + 1, 0);
    if (lo >= hi) return r;
    std::uint64_t mask = colex_unrank(static_cast<unsigned>(t.q), t.ones, lo);
    std::uint64_t since_report = 0;
    for (std::uint64_t rank = lo;; ++rank) {
        int idx = index_of_mask(t, mask);
        if (r.histogram[idx]++ == 0) r.first_mask[idx] = mask;
        if (progress && ++since_report == kProgressBatch) {
            progress->fetch_add(since_report, std::memory_order_relaxed);
            since_report = 0;
        }
        if (rank + 1 == hi) break;
        mask = next_same_popcount(mask);
    }
    if (progress && since_report)
        progress->fetch_add(since_report, std::memory_order_relaxed);
    return r;
}

std::vector<RangeResult> scan_partitioned(const IncidenceTable& t, std::uint64_t limit,
                                          const SearchOptions& options) {
    unsigned jobs = std::max(1u, options.jobs);
    if (limit < 4096) jobs = 1;
    std::vector<std::uint64_t> bounds(jobs + 1);
    for (unsigned i = 0; i <= jobs; ++i)
        bounds[i] = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(limit) * i / jobs);
    std::vector<RangeResult> results(jobs);
    if (jobs == 1) {
        results[0] = scan_range(t, 0, limit, options.progress);
        return results;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i)
        workers.emplace_back([&, i] {
            results[i] = scan_range(t, bounds[i], bounds[i + 1], options.progress);
        });
    for (auto& w : workers) w.join();
    return results;
}

EdgeLabeling labeling_from_mask(const GraphPtr& g, std::uint64_t mask) {
    std::vector<std::uint8_t> labels(g->edge_count(), 0);
    for (int i = 0; i < g->edge_count(); ++i)
        if (mask >> i & 1) labels[i] = 1;
    return EdgeLabeling(g, std::move(labels));
}

}  // namespace

EdgeFriendlyEnumerator::EdgeFriendlyEnumerator(GraphPtr graph)
    : EdgeFriendlyEnumerator(std::move(graph), 0, std::uint64_t(-1)) {}

EdgeFriendlyEnumerator::EdgeFriendlyEnumerator(GraphPtr graph, std::uint64_t begin_rank,
                                               std::uint64_t end_rank)
    : graph_(std::move(graph)) {
    if (!graph_) throw std::invalid_argument("EdgeFriendlyEnumerator: null graph");
    IncidenceTable t = make_table(*graph_);
    total_ = t.total;
    if (total_ == 0) {
        diagnostic_ = "graph has no edges; nothing to enumerate";
        return;
    }
    end_ = std::min(end_rank, total_);
    rank_ = std::min(begin_rank, end_);
    if (rank_ < end_)
        mask_ = colex_unrank(static_cast<unsigned>(t.q), t.ones, rank_);
}

std::optional<EdgeLabeling> EdgeFriendlyEnumerator::next() {
    if (rank_ >= end_) return std::nullopt;
    EdgeLabeling out = labeling_from_mask(graph_, mask_);
    ++rank_;
    if (rank_ < end_) mask_ = next_same_popcount(mask_);
    return out;
}

EbiReport compute_ebi(GraphPtr graph, const SearchOptions& options) {
    if (!graph) throw std::invalid_argument("compute_ebi: null graph");
    if (graph->edge_count() == 0)
        throw std::invalid_argument("compute_ebi: graph has no edges");
    IncidenceTable t = make_table(*graph);

    EbiReport report;
    report.p = t.p;
    report.q = t.q;
    report.regularity = graph->regularity();
    std::uint64_t limit = std::min(t.total, options.budget);
    report.complete = limit == t.total;
    report.enumerated = limit;
    if (limit == 0) return report;

    auto ranges = scan_partitioned(t, limit, options);
    std::vector<std::uint64_t> histogram(t.p + 1, 0);
    std::vector<std::uint64_t> first_mask(t.p + 1, 0);
    std::vector<bool> seen(t.p + 1, false);
    for (const RangeResult& r : ranges)
        for (int idx = 0; idx <= t.p; ++idx) {
            if (!r.histogram[idx]) continue;
            if (!seen[idx]) {
                seen[idx] = true;
                first_mask[idx] = r.first_mask[idx];  // ranges merged in rank order
            }
            histogram[idx] += r.histogram[idx];
        }
    for (int idx = 0; idx <= t.p; ++idx) {
        if (!seen[idx]) continue;
        report.index_set.push_back(idx);
        report.histogram.emplace(idx, histogram[idx]);
        report.witnesses.emplace(idx, labeling_from_mask(graph, first_mask[idx]));
    }
    return report;
}

BalancedSearchResult find_strongly_edge_balanced(GraphPtr graph, const SearchOptions& options) {
    if (!graph) throw std::invalid_argument("find_strongly_edge_balanced: null graph");
    BalancedSearchResult result;
    if (graph->edge_count() == 0) {
        // The empty labeling has e0 = e1 = 0 and v0 = v1 = 0.
        result.status = BalancedStatus::found;
        result.labeling = EdgeLabeling::all_zero(graph);
        return result;
    }
    if (graph->edge_count() % 2 != 0) {
        result.status = BalancedStatus::absent;  // e0 = e1 is impossible
        return result;
    }
    IncidenceTable t = make_table(*graph);
    std::uint64_t limit = std::min(t.total, options.budget);
    std::uint64_t mask = limit == 0 ? 0 : colex_unrank(static_cast<unsigned>(t.q), t.ones, 0);
    for (std::uint64_t rank = 0; rank < limit; ++rank) {
        int v0 = 0, v1 = 0;
        for (int v = 0; v < t.p; ++v) {
            int twice = 2 * std::popcount(mask & t.incidence[v]);
            v0 += twice < t.degree[v];
            v1 += twice > t.degree[v];
        }
        if (v0 == v1) {
            result.status = BalancedStatus::found;
            result.labeling = labeling_from_mask(graph, mask);
            result.enumerated = rank + 1;
            return result;
        }
        if (options.progress && (rank + 1) % kProgressBatch == 0)
            options.progress->fetch_add(kProgressBatch, std::memory_order_relaxed);
        if (rank + 1 < limit) mask = next_same_popcount(mask);
    }
    result.enumerated = limit;
    result.status = limit == t.total ? BalancedStatus::absent : BalancedStatus::inconclusive;
    return result;
}

MaxIndexResult max_index_search(GraphPtr graph, const SearchOptions& options) {
    EbiReport report = compute_ebi(std::move(graph), options);
    if (report.index_set.empty())
        throw std::runtime_error("max_index_search: nothing enumerated within budget");
    int best = report.index_set.back();
    return {best, report.witnesses.at(best), report.complete};
}

}  // namespace ebi
