// S-orthogonal subdigraphs of directed circulants: the Lemma 6.2 path
// casework (Cases 1-4 with all subcases), the Lemma 7.2 digon casework,
// and the Lemma 6.3 special gadgets for OP*(3,t) and OP*(2,2,t).
#ifndef OPSTAR_ORTHOGONAL_HPP
#define OPSTAR_ORTHOGONAL_HPP

#include <set>
#include <string>

#include "opstar/core.hpp"
#include "opstar/verify.hpp"

namespace opstar {

enum class OrthogonalFlavor { Paths, Digons };

struct OrthogonalRequest {
    int s = 0;
    int t = 0;
    int a = 0;
    OrthogonalFlavor flavor = OrthogonalFlavor::Paths;
};

// Bookkeeping of the active case/subcase: the derived parameters and
// difference sets from the proof.  Difference sets hold signed residues.
struct CaseworkState {
    std::string case_id;
    int d_a = 0, d_b = 0, a_prime = 0, b = 0, c = 0;
    std::set<int> t_set, t_prime, r_set, r_prime, i_set, j_set;
};

struct OrthogonalSubdigraph {
    CaseworkState state;
    ConnectionSet s_set;            // the S this subdigraph is orthogonal to
    std::vector<Arc> arcs;          // on vertex set Z_t
    std::vector<ShapeSpec> shape;   // certified component shapes
};

using DirectedPath = std::vector<Vertex>;

// The directed walk P(R, y_k): R must have the form
// {±d_1, ..., ±d_l} u {floor(t/2)} with d_1 < ... < d_l < floor(t/2).
// Traverses differences d_1, -d_2, ..., floor(t/2), ..., d_2, -d_1.
// Throws BadForm for malformed R, CollisionDetected if vertices repeat.
DirectedPath walk_P(const std::set<int>& r, int k, int t);

// Lemma 6.2: an S-orthogonal (P_1^<a>, P_{t-s-a})-subdigraph of Circ(t;S),
// S = {±(s+1)/2 .. ±floor(t/2)} (s odd) or {1, ±(s/2+1) .. ±floor(t/2)}
// (s even).  Requires 2 <= s < t, s != 3 for even t, a == s (mod 2),
// 0 <= a <= min(floor(s/3), 2*floor(t/2)-s).
OrthogonalSubdigraph orthogonal_paths(const OrthogonalRequest& req);

// Lemma 7.2: an S-orthogonal (P_1^<a>, C_2^<(t-s-a)/2>)-subdigraph,
// S = {±(s+1)/2 .. ±(t/2-1), t/2} (s odd) or {±s/2 .. ±(t/2-1)} (s even).
// Requires t even, 2 <= s < t, a == s (mod 2),
// 0 <= a <= min(floor(s/3), t-s).
OrthogonalSubdigraph orthogonal_digons(const OrthogonalRequest& req);

// Lemma 6.3 gadgets: a split Z*_t = D u S together with a Ct-factorization
// of Circ(t;D) and an S-orthogonal subdigraph H of Circ(t;S).
struct SpecialGadget {
    int t = 0;
    ConnectionSet d;                    // complement connection set
    std::vector<TwoFactor> ct_factors;  // Ct-factorization of Circ(t;D)
    ConnectionSet s_set;
    std::vector<Arc> h;                 // S-orthogonal subdigraph
    std::vector<ShapeSpec> shape;
};

// Lemma 6.3(a): gadget for OP*(3,t), t even >= 4; H has shape (P1, P_{t-4}).
SpecialGadget special_3_t(int t);

// Lemma 6.3(b): gadget for OP*(2,2,t), t even >= 8; H is a single P_{t-4}.
SpecialGadget special_22_t(int t);

}  // namespace opstar

#endif  // OPSTAR_ORTHOGONAL_HPP
