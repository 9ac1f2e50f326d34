// Strategy dispatcher: routes a cycle type through known nonexistence
// exceptions, the starter catalog, uniform base constructions, bipartite
// doubling, the two extension constructions, two-table logic, and bounded
// search, producing certified solutions with replayable strategy traces.
#ifndef OPSTAR_SOLVER_HPP
#define OPSTAR_SOLVER_HPP

#include <string>

#include "opstar/core.hpp"
#include "opstar/search.hpp"
#include "opstar/verify.hpp"

namespace opstar {

// One applied rule.  Steps are recorded in pre-order: a step that consumes
// sub-solutions (doubling, extensions) is followed by the sub-traces in
// order.  Replaying the sequence reproduces the decomposition bit-for-bit.
struct TraceStep {
    std::string rule;
    CycleType type;                 // canonical type this step solves
    std::vector<long long> params;  // rule-specific (t, q, seed, budgets, ...)
};
using StrategyTrace = std::vector<TraceStep>;

std::string to_string(const StrategyTrace& trace);

struct SearchBudget {
    unsigned seed = 1;
    long long exhaustive_nodes = 2'000'000'000;  // nonexistence oracle cap
    long long starter_nodes = 50'000'000;
    int pack_attempts = 20000;
    long long pack_factor_nodes = 20000;
    long long pack_endgame_nodes = 1'000'000;
    std::string cache_dir;  // empty: use OPSTAR_CACHE_DIR; "-": disable cache
};

struct SolveOutcome {
    enum class Status { Solved, Nonexistent, Unknown };
    enum class Witness { None, KnownException, ExhaustiveSearchLog, OpenCase, BudgetExhausted };
    Status status = Status::Unknown;
    Witness witness = Witness::None;
    Decomposition dec;     // certified iff status == Solved
    StrategyTrace trace;
    long long nodes = 0;   // search effort, if any
};

// delta(m) is declared in core.hpp.

// Theorem-level extension steps.  `base` must be a Solved outcome for the
// base type; the result solves (base type, t) resp. (base type, 2^<t/2>).
// Throws HypothesisViolated when t <= s or a > 2*floor(t/2) - s.
SolveOutcome extend_by_long_cycle(const SolveOutcome& base, const CycleType& base_type, int t);
SolveOutcome extend_by_digons(const SolveOutcome& base, const CycleType& base_type, int t);

// Main dispatcher.  Rule order: known exceptions; catalog; uniform bases;
// bipartite doubling; extensions; two-table logic; bounded search; Unknown.
// Every Solved outcome is checker-certified before being returned.
SolveOutcome solve(const CycleType& type, const SearchBudget& budget = {});

// Independent oracle: exact-cover backtracking only.  Full exhaustion is
// attempted for n <= exhaust_cap; larger orders fall back to randomized
// packing (which can never prove nonexistence).
SolveOutcome brute_force_search(const CycleType& type, const SearchBudget& budget = {},
                                int exhaust_cap = 10);

// Re-executes a recorded trace; returns the identical decomposition.
Decomposition replay_trace(const StrategyTrace& trace, const SearchBudget& budget = {});

// Explicit small constructions used by the dispatcher (exposed for tests).
Decomposition round_robin_digons(int n);            // OP*(2^<n/2>), n even
Decomposition doubled_hamilton(int n);              // OP*(n;n), n odd
Decomposition lemma_224();                          // OP*(2,2,4)

}  // namespace opstar

#endif  // OPSTAR_SOLVER_HPP
