#include "packets/finite_gl.hpp"

#include <algorithm>

namespace packets::gl {

int ProductRep::total_degree() const {
    int n = 0;
    for (const CuspidalLabel& f : factors) n += f.degree;
    return n;
}

int ProductRep::q() const {
    if (factors.empty()) throw ParameterError("empty product has no residue field");
    int q = factors.front().q;
    for (const CuspidalLabel& f : factors)
        if (f.q != q) throw ParameterError("product factors do not share one q");
    return q;
}

std::string ProductRep::to_string() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].to_string();
    }
    return out;
}

std::vector<CuspidalLabel> ProductRep::sorted_factors() const {
    std::vector<CuspidalLabel> s = factors;
    std::sort(s.begin(), s.end());
    return s;
}

bool ProductRep::same_multiset(const ProductRep& o) const {
    return sorted_factors() == o.sorted_factors();
}

void require_valid(const ProductRep& p) {
    if (p.factors.empty()) throw ParameterError("product representation needs at least one factor");
    for (const CuspidalLabel& f : p.factors)
        if (f.degree < 1) throw ParameterError("cuspidal degree must be positive");
    p.q(); // checks the shared residue field
}

std::string RestrictionTerm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].to_string();
    }
    if (!factors.empty()) out += " x ";
    out += "Sigma[" + std::to_string(gg_rank) + "]";
    return out;
}

bool RestrictionTerm::operator==(const RestrictionTerm& o) const {
    std::vector<CuspidalLabel> a = factors, b = o.factors;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return gg_rank == o.gg_rank && a == b;
}

bool RestrictionTerm::operator<(const RestrictionTerm& o) const {
    if (gg_rank != o.gg_rank) return gg_rank < o.gg_rank;
    std::vector<CuspidalLabel> a = factors, b = o.factors;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a < b;
}

std::vector<ProductRep> derivative_multiset(const ProductRep& pi, int k) {
    require_valid(pi);
    const int n = pi.total_degree();
    if (k < 0 || k > n)
        throw ParameterError("derivative order k=" + std::to_string(k) + " out of range 0.." +
                             std::to_string(n));

    // A cuspidal contributes either its 0-th derivative (itself) or its
    // top derivative (the trivial rep of GL_0, dropping out of the
    // product); everything in between vanishes. So the composition
    // factors of the k-th derivative correspond to the subsets of factors
    // whose degrees sum to k, each subset removed from the product.
    const std::size_t r = pi.factors.size();
    std::vector<ProductRep> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        int removed = 0;
        for (std::size_t t = 0; t < r; ++t)
            if (mask & (std::size_t{1} << t)) removed += pi.factors[t].degree;
        if (removed != k) continue;
        ProductRep term;
        for (std::size_t t = 0; t < r; ++t)
            if (!(mask & (std::size_t{1} << t))) term.factors.push_back(pi.factors[t]);
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<RestrictionTerm> restriction_terms(const ProductRep& pi) {
    require_valid(pi);
    const int n = pi.total_degree();
    const std::size_t r = pi.factors.size();
    std::vector<RestrictionTerm> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        int kept = 0;
        for (std::size_t t = 0; t < r; ++t)
            if (mask & (std::size_t{1} << t)) kept += pi.factors[t].degree;
        if (kept >= n) continue; // the full subsequence is excluded
        RestrictionTerm term;
        for (std::size_t t = 0; t < r; ++t)
            if (mask & (std::size_t{1} << t)) term.factors.push_back(pi.factors[t]);
        term.gg_rank = n - 1 - kept;
        out.push_back(std::move(term));
    }
    return out;
}

long hom_multiplicity(const ProductRep& pi, const ProductRep& mu) {
    require_valid(pi);
    require_valid(mu);
    if (pi.q() != mu.q()) throw ParameterError("hom_multiplicity across different residue fields");
    if (mu.total_degree() != pi.total_degree() - 1)
        throw ParameterError("hom_multiplicity: mu must have total degree n-1, got " +
                             std::to_string(mu.total_degree()) + " against n=" +
                             std::to_string(pi.total_degree()));
    for (std::size_t i = 0; i < mu.factors.size(); ++i)
        for (std::size_t j = i + 1; j < mu.factors.size(); ++j)
            if (mu.factors[i] == mu.factors[j])
                throw PreconditionError("hom_multiplicity requires pairwise distinct mu factors");

    long result = 1;
    for (const CuspidalLabel& m : mu.factors) {
        long mult = 0;
        for (const CuspidalLabel& f : pi.factors)
            if (f == m) ++mult;
        result *= (1 + mult);
    }
    return result;
}

std::map<RestrictionTerm, long> count_terms(const std::vector<RestrictionTerm>& terms) {
    std::map<RestrictionTerm, long> counts;
    for (const RestrictionTerm& t : terms) ++counts[t];
    return counts;
}

} // namespace packets::gl
