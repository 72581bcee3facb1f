#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packets/param_pair.hpp"
#include "packets/sign.hpp"

namespace packets::unitary {

// The two hermitian spaces of a given dimension, separated by the parity
// of the valuation of their discriminants. V carries the even parity
// (+1), VPrime the odd one (-1).
enum class HermitianSpace { V, VPrime };

// A conjugacy class of embeddings of the anisotropic torus (U_1)^n into
// U(V): determined by the signs eps_i = (-1)^{ord <v_i, v_i>} of an
// orthogonal line decomposition, subject to prod eps_i = disc parity.
struct Embedding {
    int n = 0;
    std::vector<Sign> eps;

    Sign disc_parity() const {
        Sign s = Sign::plus();
        for (Sign e : eps) s *= e;
        return s;
    }
    HermitianSpace space() const {
        return disc_parity().is_plus() ? HermitianSpace::V : HermitianSpace::VPrime;
    }
    SignChar to_sign_char(char family = 'e') const { return SignChar(eps, family); }
    std::string to_string() const;
};

// All 2^n embedding classes across the two hermitian spaces, in binary
// counting order (+ first). Exactly 2^{n-1} land in each space.
std::vector<Embedding> enumerate_packet(int n);

// The reductive quotient U_p x U_{n-p} of the maximal compact subgroup
// attached to an embedding: p counts the eps_i = -1 lines. Hyperspecial
// exactly when all inner products share one valuation parity.
struct ReductiveQuotient {
    int p = 0;
    int n_minus_p = 0;
    bool hyperspecial = false;
};
ReductiveQuotient reductive_quotient(const Embedding& e);

// Maps the tame distinguished character to the pair of embeddings it
// selects (for U(W) from the e-side and U(W_0) from the f-side), together
// with the matched-pair count p. Both reductive quotients have first
// factor U_p.
struct DistinguishedEmbedding {
    Embedding w;  // dimension |M|
    Embedding w0; // dimension |N|
    int p = 0;
};
DistinguishedEmbedding distinguished_embedding(const ParamPair& tame);

// Multiset of opaque tokens standing for the cuspidal support of the
// quadratic base change of a Deligne-Lusztig representation. Tokens from
// tame data are unit exponents mod q^2-1 on the conjugate-symplectic side
// and negated unit exponents on the conjugate-orthogonal side (the side
// entering the pairing through its dual), so that cross-side token
// equality says exactly "the product of the two characters is mu".
struct BaseChangeSupport {
    std::vector<long> tokens;
    std::string side; // report label only; equality looks at tokens

    std::string to_string() const;
};

BaseChangeSupport symplectic_residual_support(const std::vector<TameChar>& alphas);
BaseChangeSupport orthogonal_residual_support(const std::vector<TameChar>& betas);

// 1 when the two supports are disjoint as sets, else 0. Symmetric, and
// insensitive to multiset repetitions.
int shintani_branching(const BaseChangeSupport& s1, const BaseChangeSupport& s2);

// The arithmetic skeleton of the descent argument: twice an integer splits
// as a GL-side inner product plus a unitary-side inner product, so the two
// must have equal parity.
bool parity_argument_check(long gl_inner, long un_inner);

// Consistency check for the depth-zero construction: strip the p matched
// pairs (which carry a canonical invariant form), build the residual
// base-change supports from the unmatched characters, and verify they are
// disjoint, as the Bessel-model argument requires. Expected to pass on
// every valid input; a failure report would contradict the construction.
struct DepthZeroReport {
    int p = 0;
    BaseChangeSupport residual_m;
    BaseChangeSupport residual_n;
    bool disjoint = false;
    bool passed = false;
    std::string detail;
};
DepthZeroReport depth_zero_consistency(const ParamPair& tame);

} // namespace packets::unitary
