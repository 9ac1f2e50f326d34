// Core data model: vertices, arcs, directed cycles, 2-factors, cycle types,
// decompositions and connection sets of directed circulants, plus the cyclic
// rotation action used by all rotational constructions.
#ifndef OPSTAR_CORE_HPP
#define OPSTAR_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace opstar {

// Vertices are dense integer indices.  The distinguished fixed point u_inf of
// rotational constructions is the sentinel below; a normalization pass
// relabels it to n-1 before certification or output.
using Vertex = int;
inline constexpr Vertex kInfinity = -1;

struct OpError : std::runtime_error {
    enum class Code {
        InstanceTooSmall,
        BadConnectionSet,
        BadModulus,
        BadStarter,
        HypothesisViolated,
        SearchFailed,
        BadForm,
        CollisionDetected,
        SizeMismatch,
        OddLengthInBipartite,
        ConditionFailed,
        BadInstance,
    };
    Code code;
    OpError(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A directed cycle is its vertex sequence; arcs run v[i] -> v[i+1] and
// v.back() -> v.front().  Length 2 (a digon) is permitted.
using Cycle = std::vector<Vertex>;

struct TwoFactor {
    std::vector<Cycle> cycles;
    int n = 0;  // ground set size
};

// Canonical cycle type: lengths sorted ascending.
using CycleType = std::vector<int>;

inline CycleType canonical_type(CycleType t) {
    std::sort(t.begin(), t.end());
    return t;
}

inline int type_order(const CycleType& t) {
    int n = 0;
    for (int m : t) n += m;
    return n;
}

struct Decomposition {
    std::vector<TwoFactor> factors;
    int n = 0;
};

// Connection set of a directed circulant on Z_t.  Signed notation +-d is
// stored as the pair of residues {d, t-d}.
struct ConnectionSet {
    int t = 0;
    std::set<int> residues;  // subset of [1, t)
};

// Builds a connection set from signed residues (negative values mean t-d).
ConnectionSet make_connection_set(int t, const std::vector<int>& signed_residues);

// All n(n-1) arcs of the complete symmetric digraph K*_n on {0..n-1}.
std::vector<Arc> complete_symmetric_arcs(int n);

// Arc set of the directed circulant Circ(t; S): (i, i+d mod t) for d in S.
std::vector<Arc> circulant_digraph(int t, const ConnectionSet& s);

// Difference head - tail mod t of an arc with both ends in Z_t.
inline int arc_difference(const Arc& a, int t) {
    int d = (a.head - a.tail) % t;
    return d < 0 ? d + t : d;
}

// Applies rho^j where rho cyclically shifts the orbit {base .. base+t-1} and
// fixes every other vertex (including kInfinity).
Vertex rotate_vertex(Vertex v, int j, int t, int base = 0);
TwoFactor rotate(const TwoFactor& f, int j, int t, int base = 0);

// Sorted multiset of cycle lengths.
CycleType cycle_type_of(const TwoFactor& f);

// Arc list induced by the factor's cycles, in cycle order.
std::vector<Arc> arcs_of(const TwoFactor& f);

// Relabels kInfinity -> n-1 throughout (identity if absent).
TwoFactor normalize_infinity(const TwoFactor& f, int n);

// All canonical cycle types (partitions into parts >= 2, ascending) with
// min_n <= sum <= max_n, ordered by sum then lexicographically.
std::vector<CycleType> enumerate_cycle_types(int min_n, int max_n);

// delta(m) = 0 if m even, 1 if m odd (section 8 notation).
inline int delta(int m) { return m % 2; }

inline int mod(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace opstar

#endif  // OPSTAR_CORE_HPP
