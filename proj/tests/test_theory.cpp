#include <stdexcept>

#include "doctest.h"
#include "ebi/graph.hpp"
#include "ebi/theory.hpp"

using namespace ebi;

TEST_CASE("the odd-regular index bound on both order classes mod 4") {
    // Order divisible by 4: (r-1)n / (r+1).
    auto b = lemma3_bound(8, 3);
    REQUIRE(b.has_value());
    CHECK(b->floor_value == 4);
    CHECK(b->numerator == 4);  // 16/4 reduced
    CHECK(b->denominator == 1);

    auto k4 = lemma3_bound(4, 3);
    REQUIRE(k4.has_value());
    CHECK(k4->floor_value == 2);

    auto big = lemma3_bound(12, 5);
    REQUIRE(big.has_value());
    CHECK(big->floor_value == 8);

    // Order 2 mod 4 picks up the +4 correction.
    auto k33 = lemma3_bound(6, 3);
    REQUIRE(k33.has_value());
    CHECK(k33->floor_value == 4);

    auto frac = lemma3_bound(6, 5);
    REQUIRE(frac.has_value());
    CHECK(frac->numerator == 14);  // 28/6 reduced
    CHECK(frac->denominator == 3);
    CHECK(frac->floor_value == 4);
}

TEST_CASE("the bound only exists for odd regularity on even order") {
    CHECK_FALSE(lemma3_bound(8, 2).has_value());
    CHECK_FALSE(lemma3_bound(6, 0).has_value());
    CHECK_THROWS_AS(lemma3_bound(5, 3), std::domain_error);
    CHECK_THROWS_AS(lemma3_bound(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(lemma3_bound(4, -1), std::invalid_argument);
}

TEST_CASE("all_degrees_odd spots a single even degree") {
    CHECK(all_degrees_odd(complete_graph(4)));
    CHECK(all_degrees_odd(crown_graph(4)));
    CHECK(all_degrees_odd(complete_bipartite(3, 3)));
    CHECK(all_degrees_odd(path_graph(2)));
    CHECK_FALSE(all_degrees_odd(path_graph(3)));   // middle vertex has degree 2
    CHECK_FALSE(all_degrees_odd(crown_graph(5)));  // 4-regular
    CHECK_FALSE(all_degrees_odd(Graph()));
    CHECK_FALSE(all_degrees_odd(complete_graph(1)));
}

TEST_CASE("factor parity conditions and their disjunction") {
    Graph k4 = complete_graph(4);   // p 4, q 6
    Graph c5 = cycle_graph(5);      // p 5, q 5
    Graph p3 = path_graph(3);       // p 3, q 2
    Graph k2 = complete_graph(2);   // p 2, q 1

    ParityConditions a = theorem3_conditions(k4, c5);
    CHECK(a.first_order_size_even);
    CHECK_FALSE(a.orders_both_even);
    CHECK_FALSE(a.sizes_both_even);
    CHECK_FALSE(a.second_order_size_even);
    CHECK_FALSE(a.all_four_odd);
    CHECK(a.any_holds);

    ParityConditions b = theorem3_conditions(c5, c5);
    CHECK(b.all_four_odd);
    CHECK(b.any_holds);

    ParityConditions c = theorem3_conditions(p3, c5);
    CHECK_FALSE(c.any_holds);

    ParityConditions d = theorem3_conditions(k2, k2);
    CHECK(d.orders_both_even);
    CHECK_FALSE(d.sizes_both_even);
    CHECK(d.any_holds);

    // The conditions read the factors in order.
    ParityConditions e = theorem3_conditions(c5, k4);
    CHECK_FALSE(e.first_order_size_even);
    CHECK(e.second_order_size_even);
}
