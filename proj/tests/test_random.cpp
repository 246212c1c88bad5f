#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ebi/labeling.hpp"
#include "ebi/random.hpp"

using namespace ebi;

TEST_CASE("equal seeds replay equal streams") {
    Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 16; ++i) {
        auto x = a.next(), y = b.next(), z = c.next();
        all_equal = all_equal && x == y;
        any_diff = any_diff || x != z;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("bounded draws stay in range and reject an empty one") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) CHECK(rng.bounded(7) < 7);
    for (int i = 0; i < 5; ++i) CHECK(rng.bounded(1) == 0);
    CHECK_THROWS_AS(rng.bounded(0), std::invalid_argument);
}

TEST_CASE("random graphs are valid and reproducible") {
    Rng a(5), b(5);
    for (int p = 1; p <= 8; ++p) {
        Graph g = random_graph(a, p);
        CHECK(g.vertex_count() == p);
        CHECK(g.edge_count() <= p * (p - 1) / 2);
        CHECK(g == random_graph(b, p));
    }
    CHECK_THROWS_AS(random_graph(a, 0), std::invalid_argument);
}

TEST_CASE("random labelings are always edge-friendly") {
    Rng rng(11);
    GraphPtr c = share(crown_graph(4));
    for (int i = 0; i < 50; ++i) {
        EdgeLabeling l = random_edge_friendly(rng, c);
        CHECK(is_edge_friendly(l));
        CHECK(counts(l).e1 == 6);  // even size pins the split exactly
    }

    // Odd size flips a coin between the two balanced splits.
    GraphPtr c5 = share(cycle_graph(5));
    std::set<int> ones_seen;
    for (int i = 0; i < 100; ++i) {
        EdgeLabeling l = random_edge_friendly(rng, c5);
        CHECK(is_edge_friendly(l));
        ones_seen.insert(counts(l).e1);
    }
    CHECK(ones_seen == std::set<int>{2, 3});

    // Same seed, same labelings.
    Rng x(3), y(3);
    CHECK(random_edge_friendly(x, c) == random_edge_friendly(y, c));

    CHECK(random_edge_friendly(rng, share(path_graph(1))).bits().empty());
}
