#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opstar/core.hpp"

using namespace opstar;

TEST_CASE("complete_symmetric_arcs sizes and smallest case") {
    auto k2 = complete_symmetric_arcs(2);
    CHECK(k2 == std::vector<Arc>{{0, 1}, {1, 0}});
    CHECK(complete_symmetric_arcs(4).size() == 12);
    CHECK(complete_symmetric_arcs(9).size() == 72);
    CHECK_THROWS_AS(complete_symmetric_arcs(1), OpError);
}

TEST_CASE("circulant_digraph basic cases") {
    auto c = circulant_digraph(5, make_connection_set(5, {1, -1}));
    CHECK(c.size() == 10);
    auto inv = circulant_digraph(4, make_connection_set(4, {2}));
    std::sort(inv.begin(), inv.end());
    CHECK(inv == std::vector<Arc>{{0, 2}, {1, 3}, {2, 0}, {3, 1}});
    CHECK(circulant_digraph(6, make_connection_set(6, {1, -1, 3})).size() == 18);
    CHECK_THROWS_AS(make_connection_set(6, {0}), OpError);
    CHECK_THROWS_AS(make_connection_set(6, {6}), OpError);
}

TEST_CASE("circulant with full connection set equals K*_t") {
    const int t = 7;
    std::vector<int> all;
    for (int d = 1; d < t; ++d) all.push_back(d);
    auto circ = circulant_digraph(t, make_connection_set(t, all));
    auto full = complete_symmetric_arcs(t);
    std::sort(circ.begin(), circ.end());
    std::sort(full.begin(), full.end());
    CHECK(circ == full);
}

TEST_CASE("rotate acts as a group action and fixes non-orbit vertices") {
    TwoFactor f;
    f.n = 7;
    f.cycles = {{0, 1}, {2, 4, 5}, {kInfinity, 3}};
    CHECK(rotate(f, 0, 6).cycles == f.cycles);
    TwoFactor g = rotate(rotate(f, 2, 6), 3, 6);
    TwoFactor h = rotate(f, 5, 6);
    CHECK(g.cycles == h.cycles);
    CHECK(rotate(f, 6, 6).cycles == f.cycles);
    // infinity stays fixed
    TwoFactor r = rotate(f, 2, 6);
    CHECK(r.cycles[2][0] == kInfinity);
    CHECK(r.cycles[2][1] == 5);
}

TEST_CASE("rotate digon example") {
    TwoFactor f;
    f.n = 6;
    f.cycles = {{0, 1}, {2, 3, 4, 5}};
    TwoFactor r = rotate(f, 2, 6);
    CHECK(r.cycles[0] == Cycle{2, 3});
}

TEST_CASE("cycle_type_of sorts lengths") {
    TwoFactor f;
    f.n = 6;
    f.cycles = {{2, 3, 4, 5}, {0, 1}};
    CHECK(cycle_type_of(f) == CycleType{2, 4});
    TwoFactor ham;
    ham.n = 5;
    ham.cycles = {{0, 1, 2, 3, 4}};
    CHECK(cycle_type_of(ham) == CycleType{5});
    TwoFactor digons;
    digons.n = 6;
    digons.cycles = {{0, 1}, {2, 3}, {4, 5}};
    CHECK(cycle_type_of(digons) == CycleType{2, 2, 2});
}

TEST_CASE("arc difference and normalization") {
    CHECK(arc_difference({1, 4}, 6) == 3);
    CHECK(arc_difference({4, 1}, 6) == 3);
    CHECK(arc_difference({5, 0}, 6) == 1);
    TwoFactor f;
    f.n = 4;
    f.cycles = {{0, kInfinity}, {1, 2}};
    TwoFactor n = normalize_infinity(f, 4);
    CHECK(n.cycles[0] == Cycle{0, 3});
}

TEST_CASE("delta parity helper") {
    CHECK(delta(4) == 0);
    CHECK(delta(7) == 1);
    CHECK(delta(2) == 0);
}
