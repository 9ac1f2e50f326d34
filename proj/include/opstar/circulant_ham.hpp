// Factorizations of directed circulants: Hamilton decompositions of
// low-degree undirected circulants (found by verified backtracking search,
// standing in for the cited existence theorems), the Lemma 6.1 C_t-factor
// construction and the Lemma 7.1 digon-factor construction.
#ifndef OPSTAR_CIRCULANT_HAM_HPP
#define OPSTAR_CIRCULANT_HAM_HPP

#include "opstar/core.hpp"
#include "opstar/verify.hpp"

namespace opstar {

struct HamiltonDecomposition {
    int t = 0;
    std::vector<int> generators;            // positive residues, ascending
    std::vector<std::vector<int>> cycles;   // undirected Hamilton cycles on Z_t
};

// Decomposes Circ(t; gens u -gens) into |gens| edge-disjoint undirected
// Hamilton cycles.  Preconditions follow Theorems 2.1/2.2: one generator
// needs gcd(t,g)=1; two generators need a connected degree-4 circulant;
// three generators need t even, degree 6 and some ordering (a,b,c) with
// gcd(t,a,b)*gcd(t,c)=2.  Throws HypothesisViolated / SearchFailed.
HamiltonDecomposition hamilton_decompose_circulant(int t, std::vector<int> gens);

struct CirculantFactorization {
    int t = 0;
    ConnectionSet d;                 // the connection set that was factorized
    std::vector<TwoFactor> factors;  // on vertex set Z_t
};

// Lemma 6.1: C_t-factorization of Circ(t;D) into s-1 directed Hamilton
// factors, D = {+-1..+-(s-1)/2} (s odd) or {-1} u {+-2..+-s/2} (s even).
CirculantFactorization ct_factorization(int t, int s);

// Lemma 7.1: C_2-factorization of Circ(t;D) into s-1 digon factors (t even),
// D = {+-1..+-(s-1)/2} (s odd) or {+-1..+-(s/2-1)} u {t/2} (s even).
CirculantFactorization c2_factorization(int t, int s);

}  // namespace opstar

#endif  // OPSTAR_CIRCULANT_HAM_HPP
