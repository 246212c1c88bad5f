#include "ebi/subsets.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace ebi {

namespace {

constexpr unsigned kMaxN = 64;

const std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1>& pascal_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> t{};
        for (unsigned n = 0; n <= kMaxN; ++n) {
            t[n][0] = 1;
            for (unsigned k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
    if (n > kMaxN) throw std::invalid_argument("binomial: n > 64 not supported");
    if (k > n) return 0;
    return pascal_table()[n][k];
}

std::uint64_t colex_unrank(unsigned n, unsigned k, std::uint64_t rank) {
    if (k > n) throw std::invalid_argument("colex_unrank: k > n");
    if (rank >= binomial(n, k)) throw std::out_of_range("colex_unrank: rank out of range");
    std::uint64_t mask = 0;
    for (unsigned i = k; i >= 1; --i) {
        unsigned c = i - 1;
        while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
        mask |= std::uint64_t{1} << c;
        rank -= binomial(c, i);
        n = c;  // remaining elements must come from {0..c-1}
    }
    return mask;
}

std::uint64_t colex_rank(std::uint64_t mask) {
    std::uint64_t rank = 0;
    unsigned i = 0;
    while (mask) {
        unsigned c = static_cast<unsigned>(std::countr_zero(mask));
        rank += binomial(c, ++i);
        mask &= mask - 1;
    }
    return rank;
}

std::uint64_t next_same_popcount(std::uint64_t mask) {
    std::uint64_t u = mask & (~mask + 1);
    std::uint64_t v = mask + u;
    return v | (((mask ^ v) / u) >> 2);
}

}  // namespace ebi
