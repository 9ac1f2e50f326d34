#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "opstar/solver.hpp"

using namespace opstar;

namespace {

using Status = SolveOutcome::Status;
using Witness = SolveOutcome::Witness;

bool same_dec(const Decomposition& a, const Decomposition& b) {
    if (a.n != b.n || a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i].cycles != b.factors[i].cycles) return false;
    return true;
}

// Solved, certified, and the trace replays to the identical decomposition.
void check_solved(const CycleType& type, const char* front_rule = nullptr) {
    CAPTURE(type);
    SolveOutcome o = solve(type);
    REQUIRE(o.status == Status::Solved);
    CHECK(verify_decomposition(o.dec, type).ok);
    if (front_rule) CHECK(o.trace.front().rule == front_rule);
    CHECK(same_dec(replay_trace(o.trace), o.dec));
}

}  // namespace

TEST_CASE("parity indicator") {
    CHECK(delta(4) == 0);
    CHECK(delta(7) == 1);
    CHECK(delta(2) == 0);
}

TEST_CASE("known exceptions are Nonexistent(KnownException) and nothing else is") {
    for (const CycleType& t : enumerate_cycle_types(2, 8)) {
        SolveOutcome o = solve(t);
        const bool exceptional = t == CycleType{4} || t == CycleType{6} || t == CycleType{3, 3};
        CAPTURE(t);
        CHECK((o.witness == Witness::KnownException) == exceptional);
        CHECK((o.status == Status::Nonexistent) == exceptional);
    }
}

TEST_CASE("malformed types are rejected") {
    CHECK_THROWS_AS(solve({}), OpError);
    CHECK_THROWS_AS(solve({1, 5}), OpError);
    CHECK_THROWS_AS(brute_force_search({0}), OpError);
}

TEST_CASE("extend_by_long_cycle worked examples") {
    SolveOutcome two = solve({2});
    SolveOutcome ext = extend_by_long_cycle(two, {2}, 5);
    REQUIRE(ext.status == Status::Solved);
    CHECK(verify_decomposition(ext.dec, {2, 5}).ok);

    SolveOutcome three = solve({3});
    SolveOutcome e36 = extend_by_long_cycle(three, {3}, 6);  // even-t order-3 gadget
    CHECK(verify_decomposition(e36.dec, {3, 6}).ok);

    SolveOutcome twotwo = solve({2, 2});
    SolveOutcome e226 = extend_by_long_cycle(twotwo, {2, 2}, 6);  // catalog reroute
    CHECK(verify_decomposition(e226.dec, {2, 2, 6}).ok);
    SolveOutcome e228 = extend_by_long_cycle(twotwo, {2, 2}, 8);  // even-t order-4 gadget
    CHECK(verify_decomposition(e228.dec, {2, 2, 8}).ok);
}

TEST_CASE("extend_by_long_cycle rejects hypothesis violations") {
    SolveOutcome twotwo = solve({2, 2});
    CHECK_THROWS_AS(extend_by_long_cycle(twotwo, {2, 2}, 4), OpError);  // t <= s
    SolveOutcome unsolved;
    CHECK_THROWS_AS(extend_by_long_cycle(unsolved, {2}, 5), OpError);  // base not solved
    // a > 2*floor(t/2) - s: base (3,3,3) has s=9, a=3; t=11 gives 12 > 10.
    SolveOutcome nines = solve({3, 3, 3});
    REQUIRE(nines.status == Status::Solved);
    CHECK_THROWS_AS(extend_by_long_cycle(nines, {3, 3, 3}, 11), OpError);
}

TEST_CASE("extend_by_digons worked examples") {
    SolveOutcome five = solve({5});
    SolveOutcome e = extend_by_digons(five, {5}, 12);
    REQUIRE(e.status == Status::Solved);
    CHECK(verify_decomposition(e.dec, {2, 2, 2, 2, 2, 2, 5}).ok);

    SolveOutcome base233 = solve({2, 3, 3});
    SolveOutcome e2 = extend_by_digons(base233, {2, 3, 3}, 10);
    CHECK(verify_decomposition(e2.dec, {2, 2, 2, 2, 2, 2, 3, 3}).ok);

    SolveOutcome twotwo = solve({2, 2});
    CHECK_THROWS_AS(extend_by_digons(twotwo, {2, 2}, 4), OpError);   // t <= s
    CHECK_THROWS_AS(extend_by_digons(five, {5}, 7), OpError);        // t odd
}

TEST_CASE("every dispatch rule solves, certifies, and replays") {
    check_solved({4, 5}, "catalog");
    check_solved({2, 2, 4}, "join-2-2-4");
    check_solved({2, 2, 2}, "round-robin-digons");
    check_solved({9}, "doubled-hamilton");
    check_solved({2, 2, 4, 4}, "bipartite-double");
    check_solved({2, 3, 6}, "extend-long-cycle");
    check_solved({2, 2, 2, 3}, "extend-digons");
    check_solved({4, 9}, "starter-expand");
    check_solved({4, 4}, "heuristic-pack");
    check_solved({3, 3, 3});  // odd-order starter fallback
}

TEST_CASE("corollary-style chain of long-cycle extensions up to n = 37") {
    // Each step satisfies t - delta(t) > sum(m_i + delta(m_i)).
    SolveOutcome o = solve({2});
    for (int t : {5, 10, 20}) {
        CycleType base =
            o.trace.empty() ? CycleType{} : o.trace.front().type;  // current solved type
        o = extend_by_long_cycle(o, base, t);
        REQUIRE(o.status == Status::Solved);
    }
    CHECK(o.dec.n == 37);
    CHECK(verify_decomposition(o.dec, {2, 5, 10, 20}).ok);
    CHECK(same_dec(replay_trace(o.trace), o.dec));
}

TEST_CASE("brute force oracle: tiny verdicts and exhaustive nonexistence") {
    SolveOutcome n33 = brute_force_search({3, 3});
    CHECK(n33.status == Status::Nonexistent);
    CHECK(n33.witness == Witness::ExhaustiveSearchLog);
    SolveOutcome s23 = brute_force_search({2, 3});
    REQUIRE(s23.status == Status::Solved);
    CHECK(verify_decomposition(s23.dec, {2, 3}).ok);
    CHECK(solve({2, 3}).status == Status::Solved);  // agrees with the dispatcher
}

TEST_CASE("oracle agreement for n <= 7") {
    for (const CycleType& t : enumerate_cycle_types(2, 7)) {
        CAPTURE(t);
        CHECK(solve(t).status == brute_force_search(t).status);
    }
}

TEST_CASE("search results are cached and reloaded") {
    const std::string dir = std::filesystem::temp_directory_path() / "opstar-cache-test";
    std::filesystem::remove_all(dir);
    SearchBudget b;
    b.cache_dir = dir;
    SolveOutcome first = solve({5, 5}, b);
    REQUIRE(first.status == Status::Solved);
    CHECK(first.trace.front().rule == "heuristic-pack");
    SolveOutcome second = solve({5, 5}, b);
    REQUIRE(second.status == Status::Solved);
    CHECK(second.trace.front().rule == "cache");
    CHECK(same_dec(first.dec, second.dec));
    CHECK(same_dec(replay_trace(second.trace, b), first.dec));

    // A corrupt cache entry is ignored, not trusted.
    {
        std::ofstream out(dir + "/results-v1.cache", std::ios::app);
        out << "5,5 10 0,1;2,3\n";  // garbage decomposition
    }
    SolveOutcome third = solve({5, 5}, b);
    REQUIRE(third.status == Status::Solved);
    CHECK(third.trace.front().rule != "cache");
    std::filesystem::remove_all(dir);
}

TEST_CASE("identical seeds give identical outcomes") {
    SearchBudget b;
    b.cache_dir = "-";
    SolveOutcome a = solve({4, 4, 4}, b);
    SolveOutcome c = solve({4, 4, 4}, b);
    REQUIRE(a.status == Status::Solved);
    CHECK(same_dec(a.dec, c.dec));
    b.seed = 7;
    SolveOutcome d = solve({4, 4, 4}, b);
    REQUIRE(d.status == Status::Solved);  // different seed still solves
}
