#include "packets/dist_char.hpp"

#include <algorithm>

#include "packets/epsilon.hpp"
#include "packets/errors.hpp"

namespace packets::distchar {

ArchChi chi_arch(const ParamPair& p) {
    if (p.field_case != FieldCase::Archimedean)
        throw PreconditionError("chi_arch requires an archimedean parameter pair");
    require_valid(p);

    ArchChi out;
    out.m_counts.reserve(p.arch_m.size());
    out.n_counts.reserve(p.arch_n.size());
    std::vector<Sign> e_signs, f_signs;
    for (HalfInt a : p.arch_m) {
        int count = 0;
        for (HalfInt b : p.arch_n) {
            // a + b is a strict half-integer, never zero.
            if ((a + b).is_negative()) ++count;
        }
        out.m_counts.push_back(count);
        e_signs.push_back(Sign::of_parity(count));
    }
    for (HalfInt b : p.arch_n) {
        int count = 0;
        for (HalfInt a : p.arch_m)
            if ((a + b).is_negative()) ++count;
        out.n_counts.push_back(count);
        f_signs.push_back(Sign::of_parity(count));
    }
    out.chi.chi_e = SignChar(std::move(e_signs), 'e');
    out.chi.chi_f = SignChar(std::move(f_signs), 'f');
    return out;
}

namespace {

bool strictly_descending(const std::vector<HalfInt>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] > v[i])) return false;
    return true;
}

} // namespace

Sign chi_arch_pairwise(const ParamPair& p, std::size_t i, std::size_t j) {
    if (p.field_case != FieldCase::Archimedean)
        throw PreconditionError("chi_arch_pairwise requires an archimedean parameter pair");
    require_valid(p);
    if (!strictly_descending(p.arch_m) || !strictly_descending(p.arch_n))
        throw PreconditionError("chi_arch_pairwise requires summands sorted in descending order");
    if (i > j) throw ParameterError("chi_arch_pairwise requires i <= j");
    if (j >= p.arch_m.size()) throw ParameterError("chi_arch_pairwise index out of range");
    if (i == j) return Sign::plus(); // empty strict sandwich

    HalfInt ai = p.arch_m[i], aj = p.arch_m[j];
    int count = 0;
    for (HalfInt b : p.arch_n)
        if ((ai + b).is_positive() && (aj + b).is_negative()) ++count;
    return Sign::of_parity(count);
}

TameChi chi_tame(const ParamPair& p) {
    if (p.field_case != FieldCase::UnramifiedTame)
        throw PreconditionError("chi_tame requires an unramified tame parameter pair");
    require_valid(p);

    const std::size_t n = p.tame_m.size(), m = p.tame_n.size();

    // The mu-pairing: alpha_i is matched with the unique beta_j whose
    // product with it is mu. Uniqueness holds by cancellation; a double
    // match would contradict distinctness of the summands.
    std::vector<long> match_of_m(n, -1), match_of_n(m, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!product_is_mu(p.tame_m[i], p.tame_n[j])) continue;
            if (match_of_m[i] != -1 || match_of_n[j] != -1)
                throw InternalError("mu-pairing is not a partial matching; "
                                    "summand distinctness is broken");
            match_of_m[i] = static_cast<long>(j);
            match_of_n[j] = static_cast<long>(i);
        }
    }

    TameChi out;
    std::vector<Sign> e_orig(n, Sign::plus()), f_orig(m, Sign::plus());
    for (std::size_t i = 0; i < n; ++i)
        if (match_of_m[i] != -1) {
            e_orig[i] = Sign::minus();
            out.order_m.push_back(i);
            out.order_n.push_back(static_cast<std::size_t>(match_of_m[i]));
        }
    out.p = static_cast<int>(out.order_m.size());
    for (std::size_t j = 0; j < m; ++j)
        if (match_of_n[j] != -1) f_orig[j] = Sign::minus();
    for (std::size_t i = 0; i < n; ++i)
        if (match_of_m[i] == -1) out.order_m.push_back(i);
    for (std::size_t j = 0; j < m; ++j)
        if (match_of_n[j] == -1) out.order_n.push_back(j);

    std::vector<Sign> e_sorted, f_sorted;
    for (std::size_t k = 0; k < n; ++k) e_sorted.push_back(e_orig[out.order_m[k]]);
    for (std::size_t k = 0; k < m; ++k) f_sorted.push_back(f_orig[out.order_n[k]]);

    out.chi.chi_e = SignChar(std::move(e_sorted), 'e');
    out.chi.chi_f = SignChar(std::move(f_sorted), 'f');
    out.chi_e_original = SignChar(std::move(e_orig), 'e');
    out.chi_f_original = SignChar(std::move(f_orig), 'f');
    return out;
}

DistinguishedChar chi_general_from_epsilons(const ParamPair& p) {
    require_valid(p);
    DistinguishedChar out;
    std::vector<Sign> e_signs, f_signs;

    if (p.field_case == FieldCase::Archimedean) {
        for (HalfInt a : p.arch_m) {
            Sign prod = Sign::plus();
            for (HalfInt b : p.arch_n) prod *= epsilon::arch_epsilon(a + b);
            e_signs.push_back(prod);
        }
        for (HalfInt b : p.arch_n) {
            Sign prod = Sign::plus();
            for (HalfInt a : p.arch_m) prod *= epsilon::arch_epsilon(a + b);
            f_signs.push_back(prod);
        }
    } else if (p.field_case == FieldCase::UnramifiedTame) {
        for (const TameChar& a : p.tame_m) {
            Sign prod = Sign::plus();
            for (const TameChar& b : p.tame_n) prod *= epsilon::tame_epsilon(tame_product(a, b));
            e_signs.push_back(prod);
        }
        for (const TameChar& b : p.tame_n) {
            Sign prod = Sign::plus();
            for (const TameChar& a : p.tame_m) prod *= epsilon::tame_epsilon(tame_product(a, b));
            f_signs.push_back(prod);
        }
    } else {
        throw UnsupportedCaseError("no computable epsilon case for this parameter pair");
    }

    out.chi_e = SignChar(std::move(e_signs), 'e');
    out.chi_f = SignChar(std::move(f_signs), 'f');
    return out;
}

} // namespace packets::distchar
