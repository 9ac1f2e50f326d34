#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opstar/catalog.hpp"
#include "opstar/circulant_ham.hpp"
#include "opstar/orthogonal.hpp"
#include "opstar/recursion.hpp"

using namespace opstar;

namespace {

// Tiny hand-built solutions used as recursion bases.
Decomposition op2() {
    return {{TwoFactor{{{0, 1}}, 2}}, 2};
}

Decomposition op3() {
    return {{TwoFactor{{{0, 1, 2}}, 3}, TwoFactor{{{0, 2, 1}}, 3}}, 3};
}

Decomposition op22() {
    return {{TwoFactor{{{0, 1}, {2, 3}}, 4}, TwoFactor{{{0, 2}, {1, 3}}, 4},
             TwoFactor{{{0, 3}, {1, 2}}, 4}},
            4};
}

// OP*(2,4) assembled through the circulant join (s=2, t=4).
Decomposition op24() {
    auto ct = ct_factorization(4, 2);
    auto orth = orthogonal_paths({2, 4, 0, OrthogonalFlavor::Paths});
    SplitAssignment assign{{1, 1}, {0, 2}};
    return join_extend_circulant(op2(), 4, orth.s_set, orth.arcs, ct.factors, assign);
}

// The explicit family of subdigraphs of K*_6 solving OP*(2,2,4): H_0..H_2
// given directly, H_3..H_5 as rotations of H_2.
std::vector<std::vector<SubComponent>> family_224() {
    std::vector<std::vector<SubComponent>> fam = {
        {{false, {0}}, {false, {1}}, {true, {2, 5, 3, 4}}},
        {{false, {1}}, {false, {2}}, {true, {3, 5, 4, 0}}},
        {{false, {2}}, {false, {3}}, {true, {4, 5, 1, 0}}},
    };
    for (int j = 1; j <= 3; ++j) {
        std::vector<SubComponent> hj;
        for (const SubComponent& c : fam[2]) {
            SubComponent rc{c.is_cycle, {}};
            for (int v : c.verts) rc.verts.push_back(mod(v + j, 6));
            hj.push_back(rc);
        }
        fam.push_back(hj);
    }
    return fam;
}

}  // namespace

TEST_CASE("join_extend solves OP*(2,2,4) from the explicit family") {
    std::vector<TwoFactor> dprime = {TwoFactor{{{1, 4}, {0, 5, 2, 3}}, 6}};
    SplitAssignment assign{{1, 1, 0}, {0, 0, 4}};
    Decomposition d = join_extend(op2(), dprime, family_224(), assign);
    CHECK(d.n == 8);
    CHECK(d.factors.size() == 7);
    CHECK(verify_decomposition(d, {2, 2, 4}).ok);
}

TEST_CASE("join_extend rejects violated conditions by name") {
    std::vector<TwoFactor> dprime = {TwoFactor{{{1, 4}, {0, 5, 2, 3}}, 6}};

    // (2b): s_i do not sum to |X|.
    CHECK_THROWS_WITH_AS(
        join_extend(op2(), dprime, family_224(), SplitAssignment{{1, 1, 1}, {0, 0, 4}}),
        doctest::Contains("(2b)"), OpError);

    // (2d): a component stops being the rho^j image of H_0's.
    auto fam = family_224();
    fam[1][0].verts = {3};
    CHECK_THROWS_WITH_AS(
        join_extend(op2(), dprime, fam, SplitAssignment{{1, 1, 0}, {0, 0, 4}}),
        doctest::Contains("(2d)"), OpError);

    // (2a): wrong number of factors on Y.
    CHECK_THROWS_WITH_AS(
        join_extend(op2(), {}, family_224(), SplitAssignment{{1, 1, 0}, {0, 0, 4}}),
        doctest::Contains("(2a)"), OpError);
}

TEST_CASE("circulant join: OP*(2) + (C_t-factorization, path subdigraph) -> OP*(2,5)") {
    auto ct = ct_factorization(5, 2);
    auto orth = orthogonal_paths({2, 5, 0, OrthogonalFlavor::Paths});
    SplitAssignment assign{{1, 1}, {0, 3}};
    Decomposition d = join_extend_circulant(op2(), 5, orth.s_set, orth.arcs, ct.factors, assign);
    CHECK(d.n == 7);
    CHECK(d.factors.size() == 6);
    CHECK(verify_decomposition(d, {2, 5}).ok);
}

TEST_CASE("circulant join: OP*(3) + split gadget (t=8) -> OP*(3,8)") {
    SpecialGadget g = special_3_t(8);
    SplitAssignment assign{{1, 2}, {1, 4}};
    Decomposition d = join_extend_circulant(op3(), 8, g.s_set, g.h, g.ct_factors, assign);
    CHECK(d.n == 11);
    CHECK(d.factors.size() == 10);
    CHECK(verify_decomposition(d, {3, 8}).ok);
}

TEST_CASE("circulant join rejects a connection set of the wrong size") {
    auto ct = ct_factorization(5, 2);
    auto orth = orthogonal_paths({2, 5, 0, OrthogonalFlavor::Paths});
    ConnectionSet bad = orth.s_set;
    bad.residues.erase(bad.residues.begin());
    SplitAssignment assign{{1, 1}, {0, 3}};
    CHECK_THROWS_AS(join_extend_circulant(op2(), 5, bad, orth.arcs, ct.factors, assign), OpError);
}

TEST_CASE("bipartite doubling: OP*(2,2) x OP*(2,2) -> OP*(2,2,2,2)") {
    Decomposition d = bipartite_double(op22(), op22());
    CHECK(d.n == 8);
    CHECK(d.factors.size() == 7);
    CHECK(verify_decomposition(d, {2, 2, 2, 2}).ok);
}

TEST_CASE("bipartite doubling: OP*(2,4) x OP*(2,4) -> OP*(2,2,4,4)") {
    Decomposition base = op24();
    REQUIRE(verify_decomposition(base, {2, 4}).ok);
    Decomposition d = bipartite_double(base, base);
    CHECK(d.n == 12);
    CHECK(d.factors.size() == 11);
    CHECK(verify_decomposition(d, {2, 2, 4, 4}).ok);
}

TEST_CASE("bipartite doubling input validation") {
    CHECK_THROWS_AS(bipartite_double(op3(), op3()), OpError);      // odd lengths
    CHECK_THROWS_AS(bipartite_double(op22(), op24()), OpError);    // 4 vs 6 vertices
    try {
        bipartite_double(op3(), op3());
    } catch (const OpError& e) {
        CHECK(e.code == OpError::Code::OddLengthInBipartite);
    }
    try {
        bipartite_double(op22(), op24());
    } catch (const OpError& e) {
        CHECK(e.code == OpError::Code::SizeMismatch);
    }
}

TEST_CASE("doubled factors never add arcs inside X or inside Y") {
    Decomposition d = bipartite_double(op22(), op22());
    const int n = 4;
    // Arcs within one side, summed over all factors, must be exactly the
    // two input solutions' arc counts (n(n-1) each).
    int within = 0;
    for (const TwoFactor& f : d.factors)
        for (const Arc& a : arcs_of(f))
            if ((a.tail < n) == (a.head < n)) ++within;
    CHECK(within == 2 * n * (n - 1));
}
