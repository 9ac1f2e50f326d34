// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Budgets are asserted with the wall clock.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "opstar/catalog.hpp"
#include "opstar/circulant_ham.hpp"
#include "opstar/document.hpp"
#include "opstar/orthogonal.hpp"
#include "opstar/solver.hpp"

using namespace opstar;
using Status = SolveOutcome::Status;
using Witness = SolveOutcome::Witness;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, bool pass, const std::string& what, double secs) {
    std::printf("ACCEPTANCE %2d %s — %s (%.1fs)\n", idx, pass ? "PASS" : "FAIL", what.c_str(),
                secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

bool is_exception(const CycleType& t) {
    return t == CycleType{4} || t == CycleType{6} || t == CycleType{3, 3};
}

bool is_open_two_table(const CycleType& t) {
    return t.size() == 2 && (t[0] == 4 || t[0] == 6) && t[1] > t[0] && t[1] % 2 == 0 &&
           t[0] + t[1] >= 14;
}

// 1. Small-case completeness: every type with n <= 13 Solved + certified
//    except exactly (4), (6), (3,3); <= 5 minutes.
void criterion_1() {
    auto t0 = Clock::now();
    bool ok = true;
    SearchBudget b;
    b.cache_dir = "-";
    for (const CycleType& t : enumerate_cycle_types(2, 13)) {
        SolveOutcome o = solve(t, b);
        if (is_exception(t))
            ok = ok && o.status == Status::Nonexistent;
        else
            ok = ok && o.status == Status::Solved && verify_decomposition(o.dec, t).ok;
    }
    double secs = seconds_since(t0);
    report(1, ok && secs <= 300, "all n <= 13 certified except (4),(6),(3,3)", secs);
}

// 2. Nonexistence oracle: exhaustive proofs for (3,3), (4), (6).
void criterion_2() {
    auto t0 = Clock::now();
    bool ok = true;
    for (const CycleType& t : {CycleType{3, 3}, CycleType{4}, CycleType{6}}) {
        auto t1 = Clock::now();
        SolveOutcome o = brute_force_search(t);
        ok = ok && o.status == Status::Nonexistent && o.witness == Witness::ExhaustiveSearchLog &&
             seconds_since(t1) <= 600;
    }
    report(2, ok, "exhaustive nonexistence proofs for (3,3),(4),(6)", seconds_since(t0));
}

// 3. Catalog transcription: every entry expands and certifies.
void criterion_3() {
    auto t0 = Clock::now();
    bool ok = true;
    int count = 0;
    for (const CycleType& t : catalog_types()) {
        std::optional<CatalogEntry> e = catalog_lookup(t);
        ok = ok && e.has_value();
        if (!e) continue;
        Decomposition d = catalog_expand(*e);
        ok = ok && verify_decomposition(d, t).ok;
        ++count;
    }
    double secs = seconds_since(t0);
    report(3, ok && count >= 30 && secs <= 10,
           "catalog transcription: " + std::to_string(count) + " entries certified", secs);
}

// 4. Two-table coverage up to m1 + m2 = 24.
void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    SearchBudget b;
    b.cache_dir = "-";
    for (int sum = 4; sum <= 24; ++sum)
        for (int m1 = 2; 2 * m1 <= sum; ++m1) {
            const CycleType t = {m1, sum - m1};
            SolveOutcome o = solve(t, b);
            if (t == CycleType{3, 3}) {
                ok = ok && o.status == Status::Nonexistent;
            } else if (is_open_two_table(t)) {
                // Open in the source results: certified solution or honest
                // Unknown(OpenCase) both acceptable.
                ok = ok && ((o.status == Status::Solved && verify_decomposition(o.dec, t).ok) ||
                            (o.status == Status::Unknown && o.witness == Witness::OpenCase));
            } else {
                ok = ok && o.status == Status::Solved && verify_decomposition(o.dec, t).ok;
            }
        }
    double secs = seconds_since(t0);
    report(4, ok && secs <= 120, "two-table coverage m1+m2 <= 24", secs);
}

// 5. Path-subdigraph sweep, t <= 40, verified externally.
void criterion_5() {
    auto t0 = Clock::now();
    bool ok = true;
    int count = 0;
    for (int t = 3; t <= 40; ++t)
        for (int s = 2; s < t; ++s) {
            if (t % 2 == 0 && s == 3) continue;
            for (int a = (s % 2); a <= std::min(s / 3, 2 * (t / 2) - s); a += 2) {
                OrthogonalSubdigraph o = orthogonal_paths({s, t, a, OrthogonalFlavor::Paths});
                ok = ok && verify_orthogonal(o.arcs, t, o.s_set, o.shape).ok;
                std::vector<ShapeSpec> want(a, {false, 1});
                if (t - s - a > 0) want.push_back({false, t - s - a});
                std::vector<ShapeSpec> got;
                for (const ShapeSpec& sp : o.shape)
                    if (!(sp.is_cycle == false && sp.len == 0)) got.push_back(sp);
                std::sort(want.begin(), want.end());
                std::sort(got.begin(), got.end());
                ok = ok && want == got && static_cast<int>(o.s_set.residues.size()) == t - s;
                ++count;
            }
        }
    double secs = seconds_since(t0);
    report(5, ok && count > 400 && secs <= 60,
           "path subdigraph sweep: " + std::to_string(count) + " cases", secs);
}

// 6. Digon-subdigraph sweep, even t <= 40.
void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    int count = 0;
    for (int t = 4; t <= 40; t += 2)
        for (int s = 2; s < t; ++s)
            for (int a = (s % 2); a <= std::min(s / 3, t - s); a += 2) {
                OrthogonalSubdigraph o = orthogonal_digons({s, t, a, OrthogonalFlavor::Digons});
                ok = ok && verify_orthogonal(o.arcs, t, o.s_set, o.shape).ok;
                std::vector<ShapeSpec> want(a, {false, 1});
                for (int i = 0; i < (t - s - a) / 2; ++i) want.push_back({true, 2});
                std::vector<ShapeSpec> got;
                for (const ShapeSpec& sp : o.shape)
                    if (!(sp.is_cycle == false && sp.len == 0)) got.push_back(sp);
                std::sort(want.begin(), want.end());
                std::sort(got.begin(), got.end());
                ok = ok && want == got && static_cast<int>(o.s_set.residues.size()) == t - s;
                ++count;
            }
    double secs = seconds_since(t0);
    report(6, ok && count > 200 && secs <= 60,
           "digon subdigraph sweep: " + std::to_string(count) + " cases", secs);
}

// 7. Circulant factorization sweeps, t <= 30, verified as arc partitions.
void criterion_7() {
    auto t0 = Clock::now();
    bool ok = true;
    int count = 0;
    for (int t = 3; t <= 30; ++t) {
        for (int s = 2; s < t; ++s) {
            if (t % 2 == 0 && s == 4) continue;
            CirculantFactorization f = ct_factorization(t, s);
            ok = ok &&
                 verify_arc_partition(f.factors, t, {t}, circulant_digraph(t, f.d)).ok &&
                 static_cast<int>(f.factors.size()) == s - 1;
            ++count;
        }
        if (t % 2 == 0)
            for (int s = 2; s < t; ++s) {
                CirculantFactorization f = c2_factorization(t, s);
                const CycleType digons(t / 2, 2);
                ok = ok &&
                     verify_arc_partition(f.factors, t, digons, circulant_digraph(t, f.d)).ok &&
                     static_cast<int>(f.factors.size()) == s - 1;
                ++count;
            }
    }
    double secs = seconds_since(t0);
    report(7, ok && count > 500 && secs <= 120,
           "circulant factorization sweep: " + std::to_string(count) + " cases", secs);
}

// 8. Extension end-to-end: 50 random admissible (base, t) pairs, n <= 60.
void criterion_8() {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937 rng(2026);
    SearchBudget b;
    b.cache_dir = "-";
    int done = 0;
    while (done < 50 && ok) {
        // Base: random type with order <= 16 (complete coverage regime).
        const int k = 1 + static_cast<int>(rng() % 4);
        CycleType base;
        for (int i = 0; i < k; ++i) base.push_back(2 + static_cast<int>(rng() % 9));
        base = canonical_type(base);
        const int s = type_order(base);
        if (s > 16 || is_exception(base)) continue;
        int a = 0;
        for (int m : base) a += delta(m);
        const bool digons = rng() % 2 == 0;
        std::vector<int> ts;
        for (int t = s + 1; s + t <= 60; ++t) {
            if (digons && (t % 2 != 0 || s + a > t)) continue;
            if (!digons && s + a > 2 * (t / 2)) continue;
            if (!digons && s == 4 && t % 2 == 0 && base != CycleType{2, 2}) continue;
            ts.push_back(t);
        }
        if (ts.empty()) continue;
        const int t = ts[rng() % ts.size()];
        SolveOutcome bo = solve(base, b);
        if (bo.status != Status::Solved) {
            ok = false;
            break;
        }
        SolveOutcome ext = digons ? extend_by_digons(bo, base, t)
                                  : extend_by_long_cycle(bo, base, t);
        CycleType full = base;
        if (digons)
            full.insert(full.end(), t / 2, 2);
        else
            full.push_back(t);
        ok = ok && ext.status == Status::Solved &&
             verify_decomposition(ext.dec, canonical_type(full)).ok && ext.dec.n == s + t;
        ++done;
    }
    double secs = seconds_since(t0);
    report(8, ok && done == 50 && secs <= 300, "50 random extensions up to n = 60", secs);
}

// 9. Oracle agreement for every type with n <= 9.
void criterion_9() {
    auto t0 = Clock::now();
    bool ok = true;
    SearchBudget b;
    b.cache_dir = "-";
    for (const CycleType& t : enumerate_cycle_types(2, 9)) {
        SolveOutcome fast = solve(t, b);
        SolveOutcome oracle = brute_force_search(t, b);
        ok = ok && fast.status == oracle.status;
    }
    report(9, ok, "dispatcher agrees with the exhaustive oracle for n <= 9", seconds_since(t0));
}

// 10. Mutation robustness: 1000 single-arc mutations all rejected.
void criterion_10() {
    auto t0 = Clock::now();
    std::vector<std::pair<CycleType, Decomposition>> pool;
    for (const CycleType& t :
         {CycleType{2, 3, 4}, CycleType{9}, CycleType{4, 4}, CycleType{2, 2, 4}, CycleType{4, 5}}) {
        SolveOutcome o = solve(t);
        pool.emplace_back(t, o.dec);
    }
    std::mt19937 rng(7);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        auto [type, dec] = pool[rng() % pool.size()];
        TwoFactor& f = dec.factors[rng() % dec.factors.size()];
        Cycle& c = f.cycles[rng() % f.cycles.size()];
        size_t pos = rng() % c.size();
        Vertex old = c[pos];
        Vertex repl = static_cast<Vertex>(rng() % dec.n);
        while (repl == old) repl = static_cast<Vertex>(rng() % dec.n);
        c[pos] = repl;  // rewires the two arcs through this vertex
        ok = ok && !verify_decomposition(dec, type).ok;
    }
    report(10, ok, "1000 random mutations all rejected by the checker", seconds_since(t0));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0)
        std::printf("ACCEPTANCE: all 10 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
