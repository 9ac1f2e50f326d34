// Search kernels: exhaustive exact-cover packing of K*_n into typed
// 2-factors (the independent oracle, also able to prove nonexistence),
// randomized packing with an exact endgame (for base cases with no known
// construction), and base-q starter search for rotational solutions.
#ifndef OPSTAR_SEARCH_HPP
#define OPSTAR_SEARCH_HPP

#include <optional>
#include <string>

#include "opstar/rotational.hpp"

namespace opstar {

enum class SearchStatus { Found, ProvedNonexistent, Exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    Decomposition dec;       // valid iff status == Found
    long long nodes = 0;     // backtracking nodes consumed
};

// Exhaustive packing of K*_n (n = sum of type) into n-1 factors of the given
// type.  The first factor is fixed to the canonical block factor (sound up
// to relabeling); each later factor is anchored on the least uncovered arc.
// ProvedNonexistent is returned only when the whole space was exhausted
// within the node budget.
SearchResult exhaustive_pack(const CycleType& type, long long node_budget);

// Randomized sequential packing: factors are sampled by randomized
// backtracking; the last `endgame` factors are completed exhaustively.
// Restarts from scratch until the attempt budget runs out.
struct PackBudget {
    unsigned seed = 1;
    int attempts = 400;
    long long factor_nodes = 20000;    // budget per sampled factor
    long long endgame_nodes = 200000;  // budget for the exact completion
    int endgame = 3;                   // factors completed exhaustively
};
SearchResult heuristic_pack(const CycleType& type, const PackBudget& budget);

// Base-q starter search on Z_{n-1} u {inf}: looks for q starter factors of
// the given type jointly covering every base-q difference exactly once.
// Requires q | n-1.  Returns a validated starter set, or nullopt if the
// space was exhausted or the budget ran out.
std::optional<StarterSet> starter_search(const CycleType& type, int q, long long node_budget);

}  // namespace opstar

#endif  // OPSTAR_SEARCH_HPP
