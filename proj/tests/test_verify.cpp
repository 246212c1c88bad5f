#include <stdexcept>
#include <string>

#include "doctest.h"
#include "ebi/graph.hpp"
#include "ebi/verify.hpp"

using namespace ebi;

namespace {

const Check* find_check(const VerifyReport& r, const std::string& needle) {
    for (const Check& c : r.checks)
        if (c.name.find(needle) != std::string::npos) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("crown-range covers constructions and replays") {
    VerifyReport r = verify_crown_range(3, 8);
    CHECK(r.pass());
    // Six coverage checks plus replays for 4, 6, 7, 8.
    CHECK(r.checks.size() == 10);
    CHECK(find_check(r, "crown(7) schedule replay") != nullptr);
    CHECK(find_check(r, "crown(5) schedule replay") == nullptr);
    CHECK(find_check(r, "crown(5) index coverage") != nullptr);

    CHECK_THROWS_AS(verify_crown_range(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_crown_range(6, 4), std::invalid_argument);
}

TEST_CASE("the regular bound scope passes exhaustively") {
    VerifyReport r = verify_lemma3();
    CHECK(r.pass());
    CHECK(r.checks.size() == 3);
    const Check* crown = find_check(r, "crown:4");
    REQUIRE(crown != nullptr);
    CHECK(crown->detail.find("max index 4") != std::string::npos);

    SearchOptions tiny;
    tiny.budget = 10;
    CHECK_FALSE(verify_lemma3(tiny).pass());
}

TEST_CASE("the parity sampling scope needs odd degrees") {
    VerifyReport good = verify_lemma5(share(crown_graph(4)), 200, 1);
    CHECK(good.pass());
    CHECK(good.checks.size() == 3);

    VerifyReport bad = verify_lemma5(share(path_graph(3)), 10, 1);
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(bad.checks.front().pass);

    CHECK_THROWS_AS(verify_lemma5(share(crown_graph(4)), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma5(nullptr, 10, 1), std::invalid_argument);
}

TEST_CASE("the product size scope checks all three constructions") {
    VerifyReport r = verify_prop2(25, 6, 7);
    CHECK(r.pass());
    CHECK(r.checks.size() == 3);
    CHECK_THROWS_AS(verify_prop2(0, 6, 7), std::invalid_argument);
    CHECK_THROWS_AS(verify_prop2(10, 0, 7), std::invalid_argument);
}

TEST_CASE("the balanced-product scope stays consistent on a small budget") {
    SearchOptions small;
    small.budget = 50'000;
    VerifyReport r = verify_theorem3(small);
    CHECK(r.pass());
    CHECK(r.checks.size() == 4);
    const Check* corpus = find_check(r, "every corpus graph");
    REQUIRE(corpus != nullptr);
    CHECK(corpus->detail == "18 graphs");
}
