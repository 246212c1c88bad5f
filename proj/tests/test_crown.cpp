#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ebi/crown.hpp"
#include "ebi/labeling.hpp"

using namespace ebi;

TEST_CASE("the attainable index formula by parity of n") {
    CHECK(ebi_formula(3) == std::vector<int>{0});
    CHECK(ebi_formula(4) == std::vector<int>{0, 2, 4});
    CHECK(ebi_formula(5) == std::vector<int>{0, 1, 2});
    CHECK(ebi_formula(6) == std::vector<int>{0, 2, 4, 6, 8});
    CHECK(ebi_formula(7) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(ebi_formula(9).size() == 11);
    CHECK(ebi_formula(9).back() == 10);
    CHECK(ebi_formula(50).back() == 96);
    CHECK_THROWS_AS(ebi_formula(2), std::invalid_argument);
}

TEST_CASE("the even max labeling spreads half-windows around the ring") {
    EdgeLabeling l = max_labeling_even(4);
    // Ring vertices a1..a3 each send 1-edges to the two columns after their
    // own; a0 and b0 see only 0-edges.
    for (Edge e : std::vector<Edge>{{1, 6}, {1, 7}, {2, 5}, {2, 7}, {3, 5}, {3, 6}})
        CHECK(l.label(*l.graph().edge_index(e.u, e.v)) == 1);
    LabelCounts c = counts(l);
    CHECK(c.e0 == 6);
    CHECK(c.e1 == 6);
    CHECK(c.v1 == 6);
    CHECK(c.v0 == 2);
    CHECK(c.index == 4);

    for (int n : {4, 6, 8, 10, 20}) {
        LabelCounts cn = counts(max_labeling_even(n));
        CHECK(cn.e0 == cn.e1);
        CHECK(cn.index == 2 * n - 4);
        CHECK(cn.unlabeled == 0);  // odd degree everywhere, no ties possible
    }
    CHECK_THROWS_AS(max_labeling_even(5), std::invalid_argument);
    CHECK_THROWS_AS(max_labeling_even(2), std::invalid_argument);
}

TEST_CASE("the odd max labeling adds one marked cross edge") {
    EdgeLabeling l = max_labeling_odd(7);
    LabelCounts c = counts(l);
    CHECK(c.e0 == 21);
    CHECK(c.e1 == 21);
    CHECK(c.v0 == 4);
    CHECK(c.v1 == 10);
    CHECK(c.index == 6);
    CHECK(l.label(*l.graph().edge_index(1, 7)) == 1);  // the (a1, b0) marker

    for (int n : {7, 9, 11, 21}) {
        LabelCounts cn = counts(max_labeling_odd(n));
        CHECK(cn.e0 == cn.e1);
        CHECK(cn.index == 2 * n - 8);
    }
    CHECK_THROWS_AS(max_labeling_odd(5), std::invalid_argument);
    CHECK_THROWS_AS(max_labeling_odd(4), std::invalid_argument);
}

TEST_CASE("switch schedules walk the index down to zero") {
    SUBCASE("even: two swaps per step of two") {
        SwitchSchedule s = switch_schedule_even(4);
        CHECK(s.step_delta == 2);
        CHECK(s.steps.size() == 2);
        ReplayResult r = replay(s);
        CHECK(r.indices == std::vector<int>{4, 2, 0});
    }
    SUBCASE("even: longer run") {
        ReplayResult r = replay(switch_schedule_even(6));
        CHECK(r.indices == std::vector<int>{8, 6, 4, 2, 0});
    }
    SUBCASE("odd: unit steps, the tight 7 case") {
        SwitchSchedule s = switch_schedule_odd(7);
        CHECK(s.step_delta == 1);
        CHECK(s.steps.size() == 6);
        ReplayResult r = replay(s);
        CHECK(r.indices == std::vector<int>{6, 5, 4, 3, 2, 1, 0});
    }
    SUBCASE("odd: the general pattern") {
        ReplayResult r9 = replay(switch_schedule_odd(9));
        CHECK(r9.indices == std::vector<int>{10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
        ReplayResult r11 = replay(switch_schedule_odd(11));
        REQUIRE(r11.indices.size() == 15);
        for (int i = 0; i < 15; ++i) CHECK(r11.indices[i] == 14 - i);
    }
    SUBCASE("every intermediate state stays edge-friendly") {
        for (const EdgeLabeling& state : replay(switch_schedule_odd(13)).states)
            CHECK(is_edge_friendly(state));
    }
}

TEST_CASE("replay rejects a corrupted schedule") {
    SwitchSchedule s = switch_schedule_even(4);
    std::swap(s.steps[0].zero_edge, s.steps[0].one_edge);
    std::string message;
    try {
        replay(s);
    } catch (const std::runtime_error& e) {
        message = e.what();
    }
    CHECK(message.find("schedule step 1") != std::string::npos);
}

TEST_CASE("labeling_for_index covers the whole formula set") {
    for (int n : {3, 4, 5, 6, 7, 9, 10, 13}) {
        for (int k : ebi_formula(n)) {
            EdgeLabeling l = labeling_for_index(n, k);
            CHECK(is_edge_friendly(l));
            CHECK(counts(l).index == k);
        }
    }
    // The empty prefix is the max labeling itself.
    CHECK(labeling_for_index(8, 12) == max_labeling_even(8));
    CHECK(labeling_for_index(9, 10) == max_labeling_odd(9));
}

TEST_CASE("the three table witnesses for n = 5") {
    for (int k : {0, 1, 2}) {
        EdgeLabeling l = labeling_for_index(5, k);
        LabelCounts c = counts(l);
        CHECK(c.e0 == 10);
        CHECK(c.e1 == 10);
        CHECK(c.index == k);
    }
    CHECK(is_strongly_edge_balanced(labeling_for_index(5, 0)));
}

TEST_CASE("labeling_for_index rejects unattainable indices") {
    CHECK_THROWS_AS(labeling_for_index(4, 1), std::domain_error);  // odd k, even n
    CHECK_THROWS_AS(labeling_for_index(4, 6), std::domain_error);
    CHECK_THROWS_AS(labeling_for_index(7, 7), std::domain_error);
    CHECK_THROWS_AS(labeling_for_index(3, 1), std::domain_error);
    CHECK_THROWS_AS(labeling_for_index(5, 3), std::domain_error);
    CHECK_THROWS_AS(labeling_for_index(2, 0), std::invalid_argument);
}
