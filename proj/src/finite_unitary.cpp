#include "packets/finite_unitary.hpp"

#include <algorithm>
#include <set>

#include "packets/dist_char.hpp"
#include "packets/errors.hpp"

namespace packets::unitary {

std::string Embedding::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (i) out += ",";
        out += eps[i].is_plus() ? "+" : "-";
    }
    out += ") on ";
    out += space() == HermitianSpace::V ? "V" : "V'";
    return out;
}

std::vector<Embedding> enumerate_packet(int n) {
    if (n < 1) throw ParameterError("packet rank must be positive");
    if (n > 16) throw ResourceError("packet rank too large to enumerate");
    std::vector<Embedding> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Embedding e;
        e.n = n;
        e.eps.reserve(n);
        for (int i = 0; i < n; ++i)
            e.eps.push_back((mask >> i) & 1 ? Sign::minus() : Sign::plus());
        out.push_back(std::move(e));
    }
    return out;
}

ReductiveQuotient reductive_quotient(const Embedding& e) {
    ReductiveQuotient r;
    for (Sign s : e.eps)
        if (s.is_minus()) ++r.p;
    r.n_minus_p = e.n - r.p;
    r.hyperspecial = (r.p == 0 || r.p == e.n);
    return r;
}

DistinguishedEmbedding distinguished_embedding(const ParamPair& tame) {
    distchar::TameChi chi = distchar::chi_tame(tame);

    DistinguishedEmbedding out;
    out.p = chi.p;
    out.w.n = static_cast<int>(tame.m_size());
    out.w.eps = chi.chi_e_original.signs;
    out.w0.n = static_cast<int>(tame.n_size());
    out.w0.eps = chi.chi_f_original.signs;

    // Both quotients must report the matched-pair count as the first
    // factor; the two uses of p coincide by construction.
    if (reductive_quotient(out.w).p != out.p || reductive_quotient(out.w0).p != out.p)
        throw InternalError("matched-pair count disagrees with the embedding sign vectors");
    return out;
}

std::string BaseChangeSupport::to_string() const {
    std::string out = side.empty() ? "{" : side + "{";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(tokens[i]);
    }
    return out + "}";
}

BaseChangeSupport symplectic_residual_support(const std::vector<TameChar>& alphas) {
    BaseChangeSupport s;
    s.side = "bc(R(alpha))";
    for (const TameChar& a : alphas) {
        if (!a.is_conjugate_symplectic())
            throw PreconditionError("symplectic_residual_support: " + a.to_string());
        s.tokens.push_back(a.unit_exp());
    }
    return s;
}

BaseChangeSupport orthogonal_residual_support(const std::vector<TameChar>& betas) {
    BaseChangeSupport s;
    s.side = "bc(R(beta))^dual";
    for (const TameChar& b : betas) {
        if (!b.is_conjugate_orthogonal())
            throw PreconditionError("orthogonal_residual_support: " + b.to_string());
        long modulus = static_cast<long>(b.q()) * b.q() - 1;
        s.tokens.push_back((modulus - b.unit_exp()) % modulus);
    }
    return s;
}

int shintani_branching(const BaseChangeSupport& s1, const BaseChangeSupport& s2) {
    std::set<long> left(s1.tokens.begin(), s1.tokens.end());
    for (long t : s2.tokens)
        if (left.count(t)) return 0;
    return 1;
}

bool parity_argument_check(long gl_inner, long un_inner) {
    return (gl_inner + un_inner) % 2 == 0;
}

DepthZeroReport depth_zero_consistency(const ParamPair& tame) {
    if (tame.field_case != FieldCase::UnramifiedTame)
        throw PreconditionError("depth_zero_consistency requires a tame parameter pair");
    require_valid(tame);
    if (tame.m_size() % 2 == tame.n_size() % 2)
        throw PreconditionError("Bessel setting requires |M| and |N| of opposite parities");

    distchar::TameChi chi = distchar::chi_tame(tame);

    DepthZeroReport report;
    report.p = chi.p;

    // The reordering puts matched pairs first; the residual characters are
    // the unmatched tails.
    std::vector<TameChar> residual_alpha, residual_beta;
    for (std::size_t k = chi.p; k < chi.order_m.size(); ++k)
        residual_alpha.push_back(tame.tame_m[chi.order_m[k]]);
    for (std::size_t k = chi.p; k < chi.order_n.size(); ++k)
        residual_beta.push_back(tame.tame_n[chi.order_n[k]]);

    report.residual_m = symplectic_residual_support(residual_alpha);
    report.residual_n = orthogonal_residual_support(residual_beta);
    report.disjoint = shintani_branching(report.residual_m, report.residual_n) == 1;
    report.passed = report.disjoint;
    report.detail = report.passed
                        ? "residual base-change supports disjoint; Hom dimension 1"
                        : "residual base-change supports overlap: " +
                              report.residual_m.to_string() + " vs " +
                              report.residual_n.to_string();
    return report;
}

} // namespace packets::unitary
