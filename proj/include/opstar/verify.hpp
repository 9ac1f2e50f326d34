// Independent certification of constructions: decomposition validity,
// 2-factor typing, and S-orthogonality.  The checker never trusts
// construction-time metadata; everything is recomputed from raw arcs.
#ifndef OPSTAR_VERIFY_HPP
#define OPSTAR_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "opstar/core.hpp"

namespace opstar {

enum class FailureKind {
    MissingArc,
    DuplicateArc,
    NotSpanning,
    WrongCycleType,
    WrongFactorCount,
    NotOrthogonal,
    WrongShape,
};

std::string to_string(FailureKind k);

struct CertificateReport {
    bool ok = true;
    std::vector<std::pair<FailureKind, std::string>> failures;

    void fail(FailureKind k, std::string detail) {
        ok = false;
        failures.emplace_back(k, std::move(detail));
    }
};

// One component of a subdigraph of Z_t: either a directed path given by its
// vertex sequence (a single vertex is the empty path P_0) or a directed cycle.
struct SubComponent {
    bool is_cycle = false;
    std::vector<int> verts;
};

// Shape spec entry: a path with `len` arcs (P_len) or a cycle of length `len`.
struct ShapeSpec {
    bool is_cycle = false;
    int len = 0;
    friend auto operator<=>(const ShapeSpec&, const ShapeSpec&) = default;
};

// F spans exactly n vertices {0..n-1} with disjoint cycles of the given type.
CertificateReport verify_two_factor(const TwoFactor& f, int n, const CycleType& type);

// Exactly n-1 factors, each a (type)-factor, whose arc multiset is exactly
// the n(n-1) arcs of K*_n, each once.
CertificateReport verify_decomposition(const Decomposition& d, const CycleType& type);

// H (given as raw arcs over Z_t) contains exactly one arc of each difference
// in S and decomposes into disjoint components matching `shape` (P_0 entries
// match untouched vertices; there must be enough of them).
CertificateReport verify_orthogonal(const std::vector<Arc>& h, int t, const ConnectionSet& s,
                                    const std::vector<ShapeSpec>& shape);

// Convenience: arcs of a component list.
std::vector<Arc> component_arcs(const std::vector<SubComponent>& comps);

// Partition check of an arbitrary arc set into factors of the given type
// (used for circulant factorizations): every factor is a (type)-factor on
// Z_t and the factor arcs partition `ground` exactly.
CertificateReport verify_arc_partition(const std::vector<TwoFactor>& factors, int t,
                                       const CycleType& type, const std::vector<Arc>& ground);

}  // namespace opstar

#endif  // OPSTAR_VERIFY_HPP
