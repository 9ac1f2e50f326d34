// Composition engines: bipartite doubling (two equal-order all-even
// solutions -> one doubled solution) and the join recursion that threads a
// small solution on X through a rotation-invariant family of subdigraphs on
// Y to extend it by new cycles.
#ifndef OPSTAR_RECURSION_HPP
#define OPSTAR_RECURSION_HPP

#include "opstar/core.hpp"
#include "opstar/verify.hpp"

namespace opstar {

// Per-cycle split of the target type (m_1..m_k): cycle i contributes s_i
// vertices on the X side and s_i + t_i on the Y side.  Invariants:
// sum s_i = s, m_i = 2 s_i + t_i, sum (s_i + t_i) = t.
struct SplitAssignment {
    std::vector<int> s_i;
    std::vector<int> t_i;

    int k() const { return static_cast<int>(s_i.size()); }
    int m(int i) const { return 2 * s_i[i] + t_i[i]; }
};

// The full target type (m_1..m_k) in assignment order (unsorted).
CycleType assignment_type(const SplitAssignment& assign);

// Doubling construction: given verified solutions on K*_n with all cycle
// lengths even, produces a verified solution on K*_{2n} of the concatenated
// type.  The first n-1 factors pair the input factors on X u Y; the other n
// are rotations of the alternating bipartite factor whose X/Y blocks of size
// m_i/2 are taken in index order.  Errors: odd length present ->
// OddLengthInBipartite; orders differ -> SizeMismatch.
Decomposition bipartite_double(const Decomposition& sol_x, const Decomposition& sol_y);

// Join recursion, fully general form.  Inputs:
//  - sol_s: verified solution of OP*(m_1..m_l) on K*_s (l = cycles/factor);
//  - dprime_factors: s-1 factors of type (m_{l+1}..m_k) on Z_t whose arcs
//    are exactly A(K*_t) minus the arcs of the h_family;
//  - h_family: t subdigraphs H_0..H_{t-1} of K*_t, each listing components
//    D_1..D_k in assignment order (D_i a t_i-path if t_i < m_i, an
//    m_i-cycle if t_i = m_i); the H_j must decompose their arc ground set,
//    have V(D_i^(j)) = rho^j(V(D_i^(0))), and path endpoints must track
//    rho^j;
//  - assign: the split (s_i, t_i) with s = sum s_i and t = sum (s_i + t_i).
// Output: verified solution of OP*(m_1..m_k) on K*_{s+t} with s+t-1
// factors, X = {0..s-1}, Y = {s..s+t-1}.  "Choose any vertices" steps pick
// lowest available indices.  Throws ConditionFailed naming the violated
// condition (1, 2a, 2b, 2c, 2d).
Decomposition join_extend(const Decomposition& sol_s,
                          const std::vector<TwoFactor>& dprime_factors,
                          const std::vector<std::vector<SubComponent>>& h_family,
                          const SplitAssignment& assign);

// Join recursion, circulant form: h is an S-orthogonal subdigraph of
// Circ(t;S) whose components realize the shapes demanded by `assign` (plus
// untouched vertices for the t_i = 0 slots); the family {rho^j(h)} is built
// and delegated to join_extend.  complement_factors must factorize
// Circ(t; Z*_t - S) into s-1 factors of type (m_{l+1}..m_k).
// Errors: |S| != t - s -> SizeMismatch; otherwise as join_extend.
Decomposition join_extend_circulant(const Decomposition& sol_s, int t,
                                    const ConnectionSet& s_set, const std::vector<Arc>& h,
                                    const std::vector<TwoFactor>& complement_factors,
                                    const SplitAssignment& assign);

}  // namespace opstar

#endif  // OPSTAR_RECURSION_HPP
