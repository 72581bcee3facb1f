#include "packets/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

#include "packets/dist_char.hpp"
#include "packets/epsilon.hpp"
#include "packets/finite_gl.hpp"
#include "packets/finite_unitary.hpp"
#include "packets/gl_oracle.hpp"

namespace packets::verify {

namespace {

constexpr std::size_t kNoteCap = 20;

void note_failure(SweepResult& r, const std::string& what) {
    ++r.failures;
    if (r.notes.size() < kNoteCap) r.notes.push_back(what);
}

// All subsets of `pool` of size up to max_size, emitted in descending
// element order inside each subset (the convention the sorting-sensitive
// operations expect). pool must be sorted descending.
template <typename T, typename Fn>
void subsets_up_to(const std::vector<T>& pool, int max_size, Fn&& emit) {
    const std::size_t n = pool.size();
    if (n > 20) throw ResourceError("sweep pool too large");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) > max_size) continue;
        std::vector<T> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) subset.push_back(pool[i]);
        emit(subset);
    }
}

std::vector<HalfInt> strict_halves_desc(HalfInt bound) {
    std::vector<HalfInt> vals;
    for (std::int64_t t = bound.twice_value() % 2 == 0 ? bound.twice_value() - 1
                                                       : bound.twice_value();
         t >= 1; t -= 2) {
        vals.push_back(HalfInt::from_twice(t));
    }
    std::vector<HalfInt> out;
    for (HalfInt v : vals) out.push_back(v);
    for (auto it = vals.rbegin(); it != vals.rend(); ++it) out.push_back(-*it);
    return out; // descending: bound, ..., 1/2, -1/2, ..., -bound
}

std::vector<HalfInt> integers_desc(HalfInt bound) {
    std::vector<HalfInt> out;
    for (std::int64_t v = bound.twice_value() / 2; v >= -(bound.twice_value() / 2); --v)
        out.push_back(HalfInt::whole(v));
    return out;
}

std::string describe_pair(const ParamPair& p) {
    std::string out = "M={";
    if (p.field_case == FieldCase::Archimedean) {
        for (std::size_t i = 0; i < p.arch_m.size(); ++i)
            out += (i ? "," : "") + p.arch_m[i].to_string();
        out += "} N={";
        for (std::size_t j = 0; j < p.arch_n.size(); ++j)
            out += (j ? "," : "") + p.arch_n[j].to_string();
    } else {
        for (std::size_t i = 0; i < p.tame_m.size(); ++i)
            out += (i ? "," : "") + std::to_string(p.tame_m[i].unit_exp());
        out += "} N={";
        for (std::size_t j = 0; j < p.tame_n.size(); ++j)
            out += (j ? "," : "") + std::to_string(p.tame_n[j].unit_exp());
        out += "} q=" + std::to_string(p.tame_m.empty()
                                           ? (p.tame_n.empty() ? 0 : p.tame_n[0].q())
                                           : p.tame_m[0].q());
    }
    return out + "}";
}

template <typename Fn>
void for_each_tame_pair(const std::vector<int>& qs, int max_m, int max_n, Fn&& visit) {
    for (int q : qs) {
        std::vector<TameChar> sympl, orth;
        for (int k = 0; k <= q; ++k) {
            sympl.push_back(TameChar::conjugate_symplectic(q, static_cast<long>(k) * (q - 1)));
            orth.push_back(TameChar::conjugate_orthogonal(q, static_cast<long>(k) * (q - 1)));
        }
        subsets_up_to(sympl, max_m, [&](const std::vector<TameChar>& ms) {
            subsets_up_to(orth, max_n, [&](const std::vector<TameChar>& ns) {
                visit(ParamPair::unramified_tame(ms, ns));
            });
        });
    }
}

} // namespace

SweepResult epsilon_closed_forms(HalfInt arch_bound) {
    SweepResult r;
    r.name = "epsilon-closed-forms";

    for (std::int64_t t = 1; t <= arch_bound.twice_value(); t += 2) {
        for (std::int64_t s : {t, -t}) {
            HalfInt a = HalfInt::from_twice(s);
            ++r.instances;
            Sign expected = s > 0 ? Sign::plus() : Sign::minus();
            if (epsilon::arch_epsilon(a) != expected)
                note_failure(r, "arch sign wrong at a=" + a.to_string());
            // antisymmetry
            ++r.instances;
            if (epsilon::arch_epsilon(a) * epsilon::arch_epsilon(-a) != Sign::minus())
                note_failure(r, "arch antisymmetry broken at a=" + a.to_string());
        }
    }

    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        for (int k = 0; k <= q; ++k) {
            TameChar alpha = TameChar::conjugate_symplectic(q, static_cast<long>(k) * (q - 1));
            ++r.instances;
            Sign expected = Sign::of_parity(alpha.conductor() + 1);
            if (epsilon::tame_epsilon(alpha) != expected)
                note_failure(r, "tame sign wrong at " + alpha.to_string());
            // factorization through the unramified twist: alpha = beta * mu
            // with beta conjugate-orthogonal of the same conductor, and
            // epsilon(beta) = +1.
            ++r.instances;
            Sign via_twist = epsilon::unramified_twist_epsilon(alpha.conductor(), -1);
            if (epsilon::tame_epsilon(alpha) != via_twist)
                note_failure(r, "twist factorization broken at " + alpha.to_string());
        }
    }
    return r;
}

SweepResult chi_path_equality(int max_m, int max_n, HalfInt arch_bound,
                              std::vector<int> tame_qs) {
    SweepResult r;
    r.name = "chi-path-equality";

    std::vector<HalfInt> a_pool = strict_halves_desc(arch_bound);
    std::vector<HalfInt> b_pool = integers_desc(arch_bound);
    subsets_up_to(a_pool, max_m, [&](const std::vector<HalfInt>& ms) {
        subsets_up_to(b_pool, max_n, [&](const std::vector<HalfInt>& ns) {
            ParamPair p = ParamPair::archimedean(ms, ns);
            ++r.instances;
            distchar::ArchChi counted = distchar::chi_arch(p);
            distchar::DistinguishedChar general = distchar::chi_general_from_epsilons(p);
            if (!(counted.chi.chi_e == general.chi_e) || !(counted.chi.chi_f == general.chi_f))
                note_failure(r, "arch path mismatch at " + describe_pair(p));
        });
    });

    for_each_tame_pair(tame_qs, max_m, max_n, [&](const ParamPair& p) {
        ++r.instances;
        distchar::TameChi paired = distchar::chi_tame(p);
        distchar::DistinguishedChar general = distchar::chi_general_from_epsilons(p);
        if (!(paired.chi_e_original == general.chi_e) ||
            !(paired.chi_f_original == general.chi_f)) {
            note_failure(r, "tame path mismatch at " + describe_pair(p));
            return;
        }
        // the reordered view must be the original signs permuted
        for (std::size_t k = 0; k < paired.order_m.size(); ++k)
            if (paired.chi.chi_e.at(k) != paired.chi_e_original.at(paired.order_m[k]))
                note_failure(r, "tame reordering inconsistent at " + describe_pair(p));
    });
    return r;
}

SweepResult tame_central_identity(int max_m, int max_n, std::vector<int> tame_qs) {
    SweepResult r;
    r.name = "tame-central-identity";
    for_each_tame_pair(tame_qs, max_m, max_n, [&](const ParamPair& p) {
        ++r.instances;
        distchar::TameChi chi = distchar::chi_tame(p);
        Sign expected = Sign::of_parity(chi.p);
        if (chi.chi.chi_e.evaluate_on_minus_one() != expected ||
            chi.chi.chi_f.evaluate_on_minus_one() != expected)
            note_failure(r, "central value differs from (-1)^p at " + describe_pair(p));
    });
    return r;
}

SweepResult interlacing_epsilon(int max_n, HalfInt bound, int threads) {
    SweepResult r;
    r.name = "interlacing-epsilon";
    compact::CrossValidateReport report = compact::cross_validate(max_n, bound, threads);
    r.instances = report.instances;
    r.failures = report.counterexamples;
    r.notes = report.details;
    if (r.notes.size() > kNoteCap) r.notes.resize(kNoteCap);
    return r;
}

namespace {

// All multisets of the given size over exponents 0..q-2, nondecreasing.
void exponent_multisets(int q, int size, std::vector<int>& current,
                        const std::function<void(const std::vector<int>&)>& emit, int from = 0) {
    if (static_cast<int>(current.size()) == size) {
        emit(current);
        return;
    }
    for (int e = from; e <= q - 2; ++e) {
        current.push_back(e);
        exponent_multisets(q, size, current, emit, e);
        current.pop_back();
    }
}

void exponent_sets(int q, int size, std::vector<int>& current,
                   const std::function<void(const std::vector<int>&)>& emit, int from = 0) {
    if (static_cast<int>(current.size()) == size) {
        emit(current);
        return;
    }
    for (int e = from; e <= q - 2; ++e) {
        current.push_back(e);
        exponent_sets(q, size, current, emit, e + 1);
        current.pop_back();
    }
}

gl::ProductRep principal_series(const std::vector<int>& exponents, int q) {
    gl::ProductRep rep;
    for (int e : exponents) {
        gl::CuspidalLabel label;
        label.degree = 1;
        label.id = std::to_string(((e % (q - 1)) + (q - 1)) % (q - 1));
        label.q = q;
        rep.factors.push_back(label);
    }
    return rep;
}

} // namespace

SweepResult gl_formula_vs_oracle(std::vector<int> qs, int max_n, long size_bound) {
    SweepResult r;
    r.name = "gl-formula-vs-oracle";
    bool saw_disjoint_one = false;
    bool saw_repeated_three = false;

    for (int q : qs) {
        for (int n = 2; n <= max_n; ++n) {
            if (gl::FiniteGl::order_formula(n, q) > size_bound) continue;
            if (n - 1 > q - 1) continue; // no distinct mu of size n-1 exists
            const gl::FiniteGl& big = gl::FiniteGl::get(n, q);
            const gl::FiniteGl& small = gl::FiniteGl::get(n - 1, q);

            std::vector<std::vector<int>> pis, mus;
            std::vector<int> scratch;
            exponent_multisets(q, n, scratch,
                               [&](const std::vector<int>& v) { pis.push_back(v); });
            exponent_sets(q, n - 1, scratch,
                          [&](const std::vector<int>& v) { mus.push_back(v); });

            std::vector<gl::ClassFunction> mu_chars;
            mu_chars.reserve(mus.size());
            for (const std::vector<int>& mu : mus)
                mu_chars.push_back(gl::induced_character(small, mu));

            for (const std::vector<int>& pi : pis) {
                gl::ClassFunction pi_char = gl::induced_character(big, pi);
                for (std::size_t mi = 0; mi < mus.size(); ++mi) {
                    ++r.instances;
                    long formula = gl::hom_multiplicity(principal_series(pi, q),
                                                        principal_series(mus[mi], q));
                    long oracle = gl::hom_dimension(pi_char, mu_chars[mi]);
                    if (formula != oracle) {
                        note_failure(r, "formula " + std::to_string(formula) + " != oracle " +
                                            std::to_string(oracle) + " at q=" + std::to_string(q) +
                                            " n=" + std::to_string(n));
                        continue;
                    }
                    if (formula < 1) note_failure(r, "multiplicity below 1");
                    // classify the instance
                    bool disjoint = true;
                    for (int m : mus[mi])
                        if (std::count(pi.begin(), pi.end(), m)) disjoint = false;
                    if (disjoint && formula == 1) saw_disjoint_one = true;
                    for (int m : mus[mi])
                        if (std::count(pi.begin(), pi.end(), m) == 2 && formula % 3 == 0)
                            saw_repeated_three = true;
                }
            }
        }
    }
    if (!saw_disjoint_one) note_failure(r, "sweep never hit a disjoint-support instance of value 1");
    if (!saw_repeated_three)
        note_failure(r, "sweep never hit a repeated-factor instance with factor 3");
    return r;
}

SweepResult gl_restriction_identity(std::vector<int> qs, int max_n) {
    SweepResult r;
    r.name = "gl-restriction-identity";
    for (int q : qs) {
        for (int n = 2; n <= max_n; ++n) {
            if (gl::FiniteGl::order_formula(n, q) > gl::FiniteGl::max_order) continue;
            const gl::FiniteGl& big = gl::FiniteGl::get(n, q);
            const gl::FiniteGl& small = gl::FiniteGl::get(n - 1, q);

            std::vector<std::vector<int>> pis;
            std::vector<int> scratch;
            exponent_multisets(q, n, scratch,
                               [&](const std::vector<int>& v) { pis.push_back(v); });

            for (const std::vector<int>& pi : pis) {
                ++r.instances;
                gl::ClassFunction lhs =
                    gl::restrict_character(gl::induced_character(big, pi), small);

                gl::ClassFunction rhs;
                rhs.group = &small;
                rhs.values.assign(small.class_count(), {0.0, 0.0});
                for (const gl::RestrictionTerm& term :
                     gl::restriction_terms(principal_series(pi, q))) {
                    std::vector<gl::ParabolicBlock> blocks;
                    for (const gl::CuspidalLabel& f : term.factors) {
                        gl::ParabolicBlock b;
                        b.size = 1;
                        b.chi = gl::induced_character(gl::FiniteGl::get(1, q),
                                                      {std::stoi(f.id)});
                        blocks.push_back(std::move(b));
                    }
                    if (term.gg_rank > 0) {
                        gl::ParabolicBlock b;
                        b.size = term.gg_rank;
                        b.chi = gl::gelfand_graev_character(gl::FiniteGl::get(term.gg_rank, q));
                        blocks.push_back(std::move(b));
                    }
                    rhs = gl::cf_add(rhs, gl::parabolic_induced_character(small, blocks));
                }
                double residual = gl::max_abs_difference(lhs, rhs);
                if (residual > 1e-6)
                    note_failure(r, "restriction identity residual " + std::to_string(residual) +
                                        " at q=" + std::to_string(q) + " n=" + std::to_string(n));
            }
        }
    }
    return r;
}

SweepResult depth_zero_bookkeeping(int instances, std::vector<int> qs, int max_size,
                                   unsigned seed) {
    SweepResult r;
    r.name = "depth-zero-bookkeeping";
    std::mt19937 rng(seed);

    for (int inst = 0; inst < instances; ++inst) {
        int q = qs[rng() % qs.size()];
        int pool = q + 1; // conjugate-symplectic (or -orthogonal) tame characters at q
        int cap = std::min(max_size, pool);

        // Bessel setting: sizes of opposite parity, both at least 1.
        int n = 0, m = 0;
        do {
            n = 1 + static_cast<int>(rng() % cap);
            m = 1 + static_cast<int>(rng() % cap);
        } while ((n % 2) == (m % 2));

        std::vector<long> exponents;
        for (int k = 0; k <= q; ++k) exponents.push_back(static_cast<long>(k) * (q - 1));
        std::shuffle(exponents.begin(), exponents.end(), rng);
        std::vector<TameChar> ms, ns;
        for (int i = 0; i < n; ++i)
            ms.push_back(TameChar::conjugate_symplectic(q, exponents[i]));
        std::shuffle(exponents.begin(), exponents.end(), rng);
        for (int j = 0; j < m; ++j)
            ns.push_back(TameChar::conjugate_orthogonal(q, exponents[j]));

        ParamPair p = ParamPair::unramified_tame(ms, ns);
        ++r.instances;
        try {
            unitary::DistinguishedEmbedding emb = unitary::distinguished_embedding(p);
            unitary::ReductiveQuotient qw = unitary::reductive_quotient(emb.w);
            unitary::ReductiveQuotient qw0 = unitary::reductive_quotient(emb.w0);
            if (qw.p != emb.p || qw0.p != emb.p) {
                note_failure(r, "reductive quotient first factor differs from p at " +
                                    describe_pair(p));
                continue;
            }
            unitary::DepthZeroReport rep = unitary::depth_zero_consistency(p);
            if (!rep.passed)
                note_failure(r, "depth-zero consistency failed at " + describe_pair(p) + ": " +
                                    rep.detail);
        } catch (const Error& e) {
            note_failure(r, std::string("engine error: ") + e.what());
        }
    }
    return r;
}

} // namespace packets::verify
