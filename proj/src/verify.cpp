#include "ebi/verify.hpp"

#include <stdexcept>
#include <utility>

#include "ebi/crown.hpp"
#include "ebi/labeling.hpp"
#include "ebi/products.hpp"
#include "ebi/random.hpp"
#include "ebi/subsets.hpp"
#include "ebi/theory.hpp"

namespace ebi {

void VerifyReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

VerifyReport verify_crown_range(int from, int to) {
    if (from < 3 || to < from)
        throw std::invalid_argument("crown-range: need 3 <= from <= to, got " +
                                    std::to_string(from) + ".." + std::to_string(to));
    VerifyReport r;
    r.scope = "crown-range";
    r.params = {{"from", std::to_string(from)}, {"to", std::to_string(to)}};

    for (int n = from; n <= to; ++n) {
        std::string label = "crown(" + std::to_string(n) + ")";
        std::vector<int> ks = ebi_formula(n);
        bool ok = true;
        std::string detail;
        try {
            for (int k : ks) {
                EdgeLabeling l = labeling_for_index(n, k);
                if (!is_edge_friendly(l)) {
                    ok = false;
                    detail = "witness for index " + std::to_string(k) + " is not edge-friendly";
                    break;
                }
                int got = counts(l).index;
                if (got != k) {
                    ok = false;
                    detail = "witness for index " + std::to_string(k) + " has index " +
                             std::to_string(got);
                    break;
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        if (ok)
            detail = ks.size() == 1
                         ? "1 index, " + std::to_string(ks.front())
                         : std::to_string(ks.size()) + " indices up to " +
                               std::to_string(ks.back());
        r.add(label + " index coverage", ok, detail);

        if (n == 3 || n == 5) continue;  // witness tables only, nothing to replay

        bool ok2 = true;
        std::string d2;
        try {
            SwitchSchedule s = n % 2 == 0 ? switch_schedule_even(n) : switch_schedule_odd(n);
            ReplayResult rr = replay(s);
            int expected_start = n % 2 == 0 ? 2 * n - 4 : 2 * n - 8;
            for (std::size_t i = 0; ok2 && i < rr.indices.size(); ++i) {
                int expected = expected_start - s.step_delta * static_cast<int>(i);
                if (rr.indices[i] != expected) {
                    ok2 = false;
                    d2 = "step " + std::to_string(i) + " has index " +
                         std::to_string(rr.indices[i]) + ", expected " + std::to_string(expected);
                }
            }
            if (ok2 && rr.indices.back() != 0) {
                ok2 = false;
                d2 = "trajectory ends at " + std::to_string(rr.indices.back());
            }
            if (ok2)
                d2 = "index " + std::to_string(expected_start) + " down to 0 in " +
                     std::to_string(s.steps.size()) + " steps";
        } catch (const std::exception& e) {
            ok2 = false;
            d2 = e.what();
        }
        r.add(label + " schedule replay", ok2, d2);
    }
    return r;
}

VerifyReport verify_lemma3(const SearchOptions& options) {
    VerifyReport r;
    r.scope = "lemma3";
    r.params = {{"budget", std::to_string(options.budget)},
                {"jobs", std::to_string(options.jobs)}};

    struct Case {
        const char* name;
        Graph graph;
        bool exact;  // max index must equal the bound, not just respect it
    };
    Case cases[] = {{"crown:4", crown_graph(4), true},
                    {"complete:4", complete_graph(4), false},
                    {"bipartite:3,3", complete_bipartite(3, 3), false}};

    for (Case& c : cases) {
        int p = c.graph.vertex_count();
        auto reg = c.graph.regularity();
        bool ok = false;
        std::string detail;
        try {
            if (!reg) throw std::logic_error("graph is not regular");
            auto bound = lemma3_bound(p, *reg);
            if (!bound) throw std::logic_error("no bound for even regularity");
            MaxIndexResult m = max_index_search(share(std::move(c.graph)), options);
            if (!m.complete) {
                detail = "enumeration hit the budget before finishing";
            } else {
                ok = c.exact ? m.index == bound->floor_value : m.index <= bound->floor_value;
                detail = "max index " + std::to_string(m.index) + ", bound " +
                         std::to_string(bound->numerator) + "/" +
                         std::to_string(bound->denominator) + " (floor " +
                         std::to_string(bound->floor_value) + ")";
            }
        } catch (const std::exception& e) {
            detail = e.what();
        }
        r.add(std::string(c.name) +
                  (c.exact ? " attains the regular-graph bound" : " respects the regular-graph bound"),
              ok, detail);
    }
    return r;
}

VerifyReport verify_lemma5(GraphPtr graph, int samples, std::uint64_t seed) {
    if (!graph) throw std::invalid_argument("lemma5: null graph");
    if (samples < 1) throw std::invalid_argument("lemma5: need at least one sample");
    VerifyReport r;
    r.scope = "lemma5";
    r.params = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};

    bool odd = all_degrees_odd(*graph);
    r.add("all degrees odd", odd,
          "p=" + std::to_string(graph->vertex_count()) +
              ", q=" + std::to_string(graph->edge_count()));
    if (!odd) {
        r.add("sampling", false, "skipped: the parity conclusion needs every degree odd");
        return r;
    }

    Rng rng(seed);
    int unlabeled_hits = 0;
    int odd_index_hits = 0;
    for (int i = 0; i < samples; ++i) {
        LabelCounts c = counts(random_edge_friendly(rng, graph));
        if (c.unlabeled != 0) ++unlabeled_hits;
        if (c.index % 2 != 0) ++odd_index_hits;
    }
    std::string base = std::to_string(samples) + " samples";
    r.add("every vertex labeled", unlabeled_hits == 0,
          unlabeled_hits == 0
              ? base
              : std::to_string(unlabeled_hits) + " of " + base + " left a vertex unlabeled");
    r.add("index even", odd_index_hits == 0,
          odd_index_hits == 0
              ? base
              : std::to_string(odd_index_hits) + " of " + base + " had odd index");
    return r;
}

VerifyReport verify_prop2(int trials, int max_p, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("prop2: need at least one trial");
    if (max_p < 1) throw std::invalid_argument("prop2: need max-p >= 1");
    VerifyReport r;
    r.scope = "prop2";
    r.params = {{"trials", std::to_string(trials)},
                {"max-p", std::to_string(max_p)},
                {"seed", std::to_string(seed)}};

    struct Tally {
        int failures = 0;
        std::string first;
    };
    Tally lex, direct, cart;
    auto check = [](Tally& t, const Graph& prod, long long p, long long q, int trial) {
        if (prod.vertex_count() == p && prod.edge_count() == q) return;
        if (t.failures == 0)
            t.first = "trial " + std::to_string(trial) + ": got p=" +
                      std::to_string(prod.vertex_count()) + ", q=" +
                      std::to_string(prod.edge_count()) + ", expected p=" + std::to_string(p) +
                      ", q=" + std::to_string(q);
        ++t.failures;
    };

    Rng rng(seed);
    for (int t = 1; t <= trials; ++t) {
        Graph g1 = random_graph(rng, 1 + static_cast<int>(rng.bounded(max_p)));
        Graph g2 = random_graph(rng, 1 + static_cast<int>(rng.bounded(max_p)));
        long long p1 = g1.vertex_count(), q1 = g1.edge_count();
        long long p2 = g2.vertex_count(), q2 = g2.edge_count();
        check(lex, lexicographic_product(g1, g2), p1 * p2, p2 * p2 * q1 + p1 * q2, t);
        check(direct, direct_product(g1, g2), p1 * p2, 2 * q1 * q2, t);
        check(cart, cartesian_product(g1, g2), p1 * p2, p2 * q1 + p1 * q2, t);
    }

    std::string base = std::to_string(trials) + " random pairs, factors up to " +
                       std::to_string(max_p) + " vertices";
    auto report = [&](const char* name, const Tally& t) {
        r.add(name, t.failures == 0, t.failures == 0 ? base : t.first);
    };
    report("lexicographic product size identity", lex);
    report("direct product size identity", direct);
    report("cartesian product size identity", cart);
    return r;
}

namespace {

std::vector<std::pair<std::string, GraphPtr>> balanced_corpus() {
    std::vector<std::pair<std::string, GraphPtr>> corpus;
    for (int n = 4; n <= 16; n += 2)
        corpus.emplace_back("cycle:" + std::to_string(n), share(cycle_graph(n)));
    for (int n = 3; n <= 17; n += 2)
        corpus.emplace_back("path:" + std::to_string(n), share(path_graph(n)));
    corpus.emplace_back("complete:4", share(complete_graph(4)));
    corpus.emplace_back("bipartite:2,4", share(complete_bipartite(2, 4)));
    corpus.emplace_back("crown:3", share(crown_graph(3)));
    return corpus;
}

}  // namespace

VerifyReport verify_theorem3(const SearchOptions& options) {
    VerifyReport r;
    r.scope = "theorem3";
    r.params = {{"budget", std::to_string(options.budget)},
                {"jobs", std::to_string(options.jobs)}};

    auto corpus = balanced_corpus();

    bool ok = true;
    std::string detail;
    for (const auto& [name, g] : corpus) {
        BalancedSearchResult res = find_strongly_edge_balanced(g, options);
        if (res.status != BalancedStatus::found) {
            ok = false;
            detail = name + (res.status == BalancedStatus::absent
                                 ? ": no strongly edge-balanced labeling exists"
                                 : ": search inconclusive within budget");
            break;
        }
    }
    if (ok) detail = std::to_string(corpus.size()) + " graphs";
    r.add("every corpus graph admits a strongly edge-balanced labeling", ok, detail);

    // A pair is decided only when the whole labeling space fits the budget,
    // so "absent" verdicts are proofs rather than timeouts.
    auto decidable = [&](const Graph& prod) {
        int q = prod.edge_count();
        return q >= 1 && q <= 64 && binomial(q, (q + 1) / 2) <= options.budget;
    };

    auto product_consistency = [&](const char* name, auto make, bool ordered) {
        int decided = 0, balanced = 0, skipped = 0;
        bool pass = true;
        std::string d;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            for (std::size_t j = ordered ? 0 : i; j < corpus.size(); ++j) {
                const Graph& g1 = *corpus[i].second;
                const Graph& g2 = *corpus[j].second;
                Graph prod = make(g1, g2);
                if (!decidable(prod)) {
                    ++skipped;
                    continue;
                }
                BalancedSearchResult res = find_strongly_edge_balanced(share(std::move(prod)), options);
                if (res.status == BalancedStatus::inconclusive) {
                    ++skipped;
                    continue;
                }
                ++decided;
                if (res.status == BalancedStatus::found) {
                    ++balanced;
                    if (!theorem3_conditions(g1, g2).any_holds && pass) {
                        pass = false;
                        d = corpus[i].first + " with " + corpus[j].first +
                            ": balanced labeling found but every parity condition fails";
                    }
                }
            }
        if (pass)
            d = std::to_string(decided) + " pairs decided (" + std::to_string(balanced) +
                " balanced), " + std::to_string(skipped) + " beyond enumeration reach";
        r.add(name, pass, d);
    };
    product_consistency("cartesian: balanced products imply a factor parity condition",
                        [](const Graph& a, const Graph& b) { return cartesian_product(a, b); },
                        false);
    product_consistency("lexicographic: balanced products imply a factor parity condition",
                        [](const Graph& a, const Graph& b) { return lexicographic_product(a, b); },
                        true);

    int decided = 0, skipped = 0;
    bool okd = true;
    std::string dd;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j) {
            Graph prod = direct_product(*corpus[i].second, *corpus[j].second);
            if (!decidable(prod)) {
                ++skipped;
                continue;
            }
            BalancedSearchResult res = find_strongly_edge_balanced(share(std::move(prod)), options);
            if (res.status == BalancedStatus::inconclusive) {
                ++skipped;
                continue;
            }
            ++decided;
            if (res.status != BalancedStatus::found && okd) {
                okd = false;
                dd = corpus[i].first + " with " + corpus[j].first +
                     ": direct product admits no strongly edge-balanced labeling";
            }
        }
    if (okd)
        dd = std::to_string(decided) + " pairs decided, " + std::to_string(skipped) +
             " beyond enumeration reach";
    r.add("every decidable direct product admits a strongly edge-balanced labeling", okd, dd);
    return r;
}

}  // namespace ebi
