#include <bit>
#include <cstdint>
#include <stdexcept>

#include "doctest.h"
#include "ebi/subsets.hpp"

using namespace ebi;

TEST_CASE("binomial is exact across the supported universe") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(42, 21) == 538257874440ull);
    CHECK(binomial(64, 32) == 1832624140942590534ull);
    CHECK(binomial(6, 7) == 0);
    CHECK_THROWS_AS(binomial(65, 1), std::invalid_argument);
}

TEST_CASE("colex unrank inverts rank and yields ascending masks") {
    std::uint64_t prev = 0;
    for (std::uint64_t r = 0; r < binomial(6, 3); ++r) {
        std::uint64_t mask = colex_unrank(6, 3, r);
        CHECK(std::popcount(mask) == 3);
        CHECK(colex_rank(mask) == r);
        if (r > 0) CHECK(mask > prev);
        prev = mask;
    }
}

TEST_CASE("colex order on 2-subsets of a 4-set") {
    CHECK(colex_unrank(4, 2, 0) == 0b0011);
    CHECK(colex_unrank(4, 2, 1) == 0b0101);
    CHECK(colex_unrank(4, 2, 2) == 0b0110);
    CHECK(colex_unrank(4, 2, 3) == 0b1001);
    CHECK(colex_unrank(4, 2, 4) == 0b1010);
    CHECK(colex_unrank(4, 2, 5) == 0b1100);
}

TEST_CASE("next_same_popcount steps through the same order as unrank") {
    std::uint64_t mask = colex_unrank(8, 4, 0);
    for (std::uint64_t r = 1; r < binomial(8, 4); ++r) {
        mask = next_same_popcount(mask);
        CHECK(mask == colex_unrank(8, 4, r));
    }
}
