#pragma once

#include <map>
#include <string>
#include <vector>

#include "packets/errors.hpp"

namespace packets::gl {

// Symbolic label for an irreducible cuspidal representation of
// GL_degree(F_q). Labels with equal (degree, id, q) denote the same
// cuspidal; no other identifications are made.
struct CuspidalLabel {
    int degree = 1;
    std::string id;
    int q = 0;

    bool operator==(const CuspidalLabel& o) const {
        return degree == o.degree && id == o.id && q == o.q;
    }
    bool operator<(const CuspidalLabel& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (id != o.id) return id < o.id;
        return q < o.q;
    }
    std::string to_string() const {
        return id + (degree > 1 ? "[" + std::to_string(degree) + "]" : "");
    }
};

// A parabolically induced product pi_1 x ... x pi_r of cuspidals, the
// representation of GL_n(F_q) with n the sum of the factor degrees.
struct ProductRep {
    std::vector<CuspidalLabel> factors;

    int total_degree() const;
    int q() const; // common q of the factors; ParameterError if mixed
    std::string to_string() const;

    // Canonical multiset key (sorted factors) for comparisons.
    std::vector<CuspidalLabel> sorted_factors() const;
    bool same_multiset(const ProductRep& o) const;
};

void require_valid(const ProductRep& p);

// One summand of the restriction to GL_{n-1}: a product of a subset of the
// original cuspidal factors with the Gelfand-Graev representation
// Sigma[gg_rank] of the complementary rank, so that
// sum of factor degrees + gg_rank = n - 1.
struct RestrictionTerm {
    std::vector<CuspidalLabel> factors;
    int gg_rank = 0;

    std::string to_string() const;
    bool operator==(const RestrictionTerm& o) const;
    bool operator<(const RestrictionTerm& o) const;
};

// Composition factors of the k-th derivative of the product, by the
// Leibnitz rule with the cuspidal base case (only the 0-th and the top
// derivative of a cuspidal survive). Returned as a multiset: repeated
// factors appear repeatedly.
std::vector<ProductRep> derivative_multiset(const ProductRep& pi, int k);

// The full decomposition of the restriction of pi to GL_{n-1}: one term
// for each subsequence of the factors of total degree < n (the empty
// subsequence included), each completed by the Gelfand-Graev factor of
// the complementary rank. Multiset semantics. n >= 1; for n = 1 the
// restriction to GL_0 is the single term Sigma[0].
std::vector<RestrictionTerm> restriction_terms(const ProductRep& pi);

// dim Hom_{GL_{n-1}}(pi, mu) for mu with pairwise distinct factors:
// prod_i (1 + m_i) where m_i is the multiplicity of the i-th factor of mu
// in the factor multiset of pi. Equals 2^d when pi's factors are also
// distinct, d the number of common factors.
long hom_multiplicity(const ProductRep& pi, const ProductRep& mu);

// Convenience: count each distinct term of a restriction decomposition.
std::map<RestrictionTerm, long> count_terms(const std::vector<RestrictionTerm>& terms);

} // namespace packets::gl
