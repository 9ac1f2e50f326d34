#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opstar/catalog.hpp"
#include "opstar/verify.hpp"

using namespace opstar;

TEST_CASE("base_q_difference examples from Def 3.1") {
    auto d1 = base_q_difference({2, 7}, 10, 3);
    CHECK(d1.kind == BaseQDifference::Kind::Finite);
    CHECK(d1.d == 5);
    CHECK(d1.r == 2);
    auto d2 = base_q_difference({6, kInfinity}, 9, 1);
    CHECK(d2.kind == BaseQDifference::Kind::PlusInf);
    CHECK(d2.r == 0);
    auto d3 = base_q_difference({kInfinity, 4}, 10, 3);
    CHECK(d3.kind == BaseQDifference::Kind::MinusInf);
    CHECK(d3.r == 1);
    CHECK_THROWS_AS(base_q_difference({0, 1}, 10, 4), OpError);
}

TEST_CASE("base-q difference is rho^q invariant") {
    const int n = 10, q = 3;
    std::vector<Arc> arcs = {{0, 5}, {2, 7}, {4, kInfinity}, {kInfinity, 8}};
    for (const Arc& a : arcs) {
        Arc shifted{a.tail == kInfinity ? kInfinity : mod(a.tail + q, n - 1),
                    a.head == kInfinity ? kInfinity : mod(a.head + q, n - 1)};
        CHECK(base_q_difference(a, n, q) == base_q_difference(shifted, n, q));
    }
}

TEST_CASE("expand_starters: OP*(4,5) single starter gives 8 verified factors") {
    auto entry = catalog_lookup({4, 5});
    REQUIRE(entry.has_value());
    auto& ss = std::get<StarterSet>(entry->data);
    Decomposition dec = expand_starters(ss);
    CHECK(dec.factors.size() == 8);
    CHECK(verify_decomposition(dec, {4, 5}).ok);
}

TEST_CASE("expand_starters: OP*(4,6) q=3 gives 9 verified factors") {
    auto entry = catalog_lookup({4, 6});
    REQUIRE(entry.has_value());
    Decomposition dec = expand_starters(std::get<StarterSet>(entry->data));
    CHECK(dec.factors.size() == 9);
    CHECK(verify_decomposition(dec, {4, 6}).ok);
}

TEST_CASE("expand_starters: OP*(3,3,4) q=3 gives 9 verified factors") {
    auto entry = catalog_lookup({3, 3, 4});
    REQUIRE(entry.has_value());
    Decomposition dec = expand_starters(std::get<StarterSet>(entry->data));
    CHECK(dec.factors.size() == 9);
    CHECK(verify_decomposition(dec, {3, 3, 4}).ok);
}

TEST_CASE("expand_starters rejects a broken starter with a witness") {
    auto entry = catalog_lookup({4, 5});
    StarterSet ss = std::get<StarterSet>(entry->data);
    ss.starters[0].cycles[0] = {0, 1, 5, 4};  // duplicates a difference
    CHECK(!validate_starter_set(ss).ok);
    CHECK_THROWS_AS(expand_starters(ss), OpError);
}

TEST_CASE("catalog transcription: every entry expands and passes verification") {
    for (const CycleType& type : catalog_types()) {
        CAPTURE(type);
        auto entry = catalog_lookup(type);
        REQUIRE(entry.has_value());
        Decomposition dec = catalog_expand(*entry);
        CHECK(static_cast<size_t>(dec.n - 1) == dec.factors.size());
        CHECK(verify_decomposition(dec, type).ok);
    }
}

TEST_CASE("catalog_lookup misses types outside the catalog") {
    CHECK(!catalog_lookup({7, 9}).has_value());
}

TEST_CASE("catalog contains no q=1 starter violating the parity obstruction") {
    // For even n with all lengths >= 3, no q=1 starter can exist (section 9).
    for (const CycleType& type : catalog_types()) {
        auto entry = catalog_lookup(type);
        if (!std::holds_alternative<StarterSet>(entry->data)) continue;
        const auto& ss = std::get<StarterSet>(entry->data);
        if (ss.q != 1 || ss.n % 2 != 0) continue;
        bool all_big = true;
        for (int m : type) all_big &= (m >= 3);
        CHECK(!all_big);
    }
}
