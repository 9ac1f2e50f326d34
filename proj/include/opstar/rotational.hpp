// Base-q 1-rotational machinery: base-q differences of arcs over
// {u_0..u_{n-2}, u_inf}, starter validation, and orbit expansion.
#ifndef OPSTAR_ROTATIONAL_HPP
#define OPSTAR_ROTATIONAL_HPP

#include <optional>

#include "opstar/core.hpp"
#include "opstar/verify.hpp"

namespace opstar {

struct BaseQDifference {
    enum class Kind { Finite, PlusInf, MinusInf };
    Kind kind = Kind::Finite;
    int d = 0;  // residue mod n-1, in [1, n-1) (Finite only)
    int r = 0;  // residue mod q
    friend auto operator<=>(const BaseQDifference&, const BaseQDifference&) = default;
};

// q starter 2-factors on {u_0..u_{n-2}, u_inf} that jointly contain exactly
// one arc of each base-q difference.
struct StarterSet {
    int n = 0;
    int q = 1;  // divides n-1
    std::vector<TwoFactor> starters;
    CycleType type;
};

// Def 3.1: (u_i,u_j) -> d_r with d = j-i mod n-1, r = i mod q;
// (u_i,u_inf) -> inf_r; (u_inf,u_i) -> -inf_r.
BaseQDifference base_q_difference(const Arc& a, int n, int q);

// Checks the starter invariant; on failure, reports the offending duplicated
// or missing base-q difference.
CertificateReport validate_starter_set(const StarterSet& ss);

// Lemma 3.2: the factors { rho^{qi}(F_j) } with rho = (u_0..u_{n-2})(u_inf),
// normalized (u_inf -> n-1).  Throws BadStarter if validation fails.
Decomposition expand_starters(const StarterSet& ss);

}  // namespace opstar

#endif  // OPSTAR_ROTATIONAL_HPP
