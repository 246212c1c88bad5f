#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ebi/graph.hpp"
#include "ebi/search.hpp"

namespace ebi {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string scope;
    std::vector<std::pair<std::string, std::string>> params;  // echoed into output
    std::vector<Check> checks;

    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail);
};

/// Constructive coverage for crown(n), n in [from, to]: every index the
/// closed-form set promises has a witness labeling with that exact index,
/// and the switch schedules replay as strictly descending trajectories
/// ending at 0.
VerifyReport verify_crown_range(int from, int to);

/// The regular-graph index bound on the three smallest odd-regular cases:
/// exhaustive max index of crown(4) meets its bound exactly, K_4 and
/// K_{3,3} stay within theirs.
VerifyReport verify_lemma3(const SearchOptions& options = {});

/// Samples random edge-friendly labelings of a graph with all degrees odd;
/// every sample must label every vertex and land on an even index.
VerifyReport verify_lemma5(GraphPtr graph, int samples, std::uint64_t seed);

/// Product size identities on seeded random graph pairs.
VerifyReport verify_prop2(int trials, int max_p, std::uint64_t seed);

/// Strongly edge-balanced labelings over a fixed corpus of small even-size
/// graphs: every corpus graph admits one; every decidable direct product of
/// a corpus pair admits one; and whenever a cartesian or lexicographic
/// product of a corpus pair admits one, the factor parity conditions agree.
VerifyReport verify_theorem3(const SearchOptions& options = {});

}  // namespace ebi
