#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "packets/dist_char.hpp"
#include "packets/errors.hpp"

using namespace packets;
using namespace packets::distchar;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

// Independent oracle: the sign pattern by direct enumeration of all
// (summand, summand) pairs, kept apart from the library's counting path.
std::vector<int> brute_m_counts(const std::vector<HalfInt>& as, const std::vector<HalfInt>& bs) {
    std::vector<int> counts;
    for (HalfInt a : as) {
        int c = 0;
        for (HalfInt b : bs)
            if ((a + b).twice_value() < 0) ++c;
        counts.push_back(c);
    }
    return counts;
}

} // namespace

TEST_CASE("archimedean distinguished character") {
    // all sums positive
    ArchChi simple = chi_arch(ParamPair::archimedean({h(1)}, {HalfInt::whole(0)}));
    CHECK(simple.chi.chi_e.at(0) == Sign::plus());
    CHECK(simple.chi.chi_f.at(0) == Sign::plus());

    // expected values computed with the pair-scan oracle
    ParamPair p = ParamPair::archimedean({h(1), h(-3)}, {HalfInt::whole(1), HalfInt::whole(-1)});
    std::vector<int> mc = brute_m_counts(p.arch_m, p.arch_n);
    REQUIRE(mc == std::vector<int>{1, 2});
    ArchChi chi = chi_arch(p);
    CHECK(chi.m_counts == mc);
    CHECK(chi.chi.chi_e.at(0) == Sign::minus());
    CHECK(chi.chi.chi_e.at(1) == Sign::plus());
    std::vector<int> nc = brute_m_counts(p.arch_n, p.arch_m); // symmetric roles
    REQUIRE(nc == std::vector<int>{1, 2});
    CHECK(chi.n_counts == nc);
    CHECK(chi.chi.chi_f.at(0) == Sign::minus());
    CHECK(chi.chi.chi_f.at(1) == Sign::plus());

    ArchChi single = chi_arch(ParamPair::archimedean({h(-1)}, {HalfInt::whole(0)}));
    CHECK(single.chi.chi_e.at(0) == Sign::minus());

    CHECK_THROWS_AS(chi_arch(ParamPair::archimedean({HalfInt::whole(1)}, {})), ValidationError);
    CHECK_THROWS_AS(chi_arch(ParamPair::unramified_tame({}, {})), PreconditionError);
}

TEST_CASE("pairwise signs") {
    ParamPair p = ParamPair::archimedean({h(1), h(-3)}, {HalfInt::whole(1), HalfInt::whole(-1)});
    CHECK(chi_arch_pairwise(p, 0, 1) == Sign::minus()); // one sandwiched b
    CHECK(chi_arch_pairwise(p, 0, 0) == Sign::plus());  // empty strict sandwich
    CHECK(chi_arch_pairwise(p, 1, 1) == Sign::plus());

    ParamPair q = ParamPair::archimedean({h(3), h(1)}, {HalfInt::whole(0)});
    CHECK(chi_arch_pairwise(q, 0, 1) == Sign::plus()); // both sums positive

    ParamPair unsorted = ParamPair::archimedean({h(-3), h(1)}, {HalfInt::whole(0)});
    CHECK_THROWS_AS(chi_arch_pairwise(unsorted, 0, 1), PreconditionError);
    CHECK_THROWS_AS(chi_arch_pairwise(p, 1, 0), ParameterError);
    CHECK_THROWS_AS(chi_arch_pairwise(p, 0, 2), ParameterError);
}

TEST_CASE("pairwise signs agree with products of chi values") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        // random sorted-descending pair
        std::vector<HalfInt> as, bs;
        int na = 1 + static_cast<int>(rng() % 4), nb = static_cast<int>(rng() % 4);
        std::vector<std::int64_t> avals{9, 7, 5, 3, 1, -1, -3, -5, -7, -9};
        std::shuffle(avals.begin(), avals.end(), rng);
        avals.resize(na);
        std::sort(avals.rbegin(), avals.rend());
        for (auto v : avals) as.push_back(h(v));
        std::vector<std::int64_t> bvals{4, 3, 2, 1, 0, -1, -2, -3, -4};
        std::shuffle(bvals.begin(), bvals.end(), rng);
        bvals.resize(nb);
        std::sort(bvals.rbegin(), bvals.rend());
        for (auto v : bvals) bs.push_back(HalfInt::whole(v));

        ParamPair p = ParamPair::archimedean(as, bs);
        ArchChi chi = chi_arch(p);
        for (std::size_t i = 0; i < as.size(); ++i)
            for (std::size_t j = i; j < as.size(); ++j)
                CHECK(chi_arch_pairwise(p, i, j) == chi.chi.chi_e.at(i) * chi.chi.chi_e.at(j));
    }
}

TEST_CASE("pairwise consistency, exhaustive over sorted subsets") {
    // every descending subset of strict halves in [-7/2, 7/2] (size <= 3)
    // against every descending subset of integers in [-2, 2] (size <= 3)
    std::vector<std::int64_t> apool{7, 5, 3, 1, -1, -3, -5, -7};
    std::vector<std::int64_t> bpool{2, 1, 0, -1, -2};
    for (std::uint32_t am = 0; am < (1u << apool.size()); ++am) {
        if (std::popcount(am) < 1 || std::popcount(am) > 3) continue;
        std::vector<HalfInt> as;
        for (std::size_t i = 0; i < apool.size(); ++i)
            if (am & (1u << i)) as.push_back(h(apool[i]));
        for (std::uint32_t bm = 0; bm < (1u << bpool.size()); ++bm) {
            if (std::popcount(bm) > 3) continue;
            std::vector<HalfInt> bs;
            for (std::size_t i = 0; i < bpool.size(); ++i)
                if (bm & (1u << i)) bs.push_back(HalfInt::whole(bpool[i]));
            ParamPair p = ParamPair::archimedean(as, bs);
            ArchChi chi = chi_arch(p);
            for (std::size_t i = 0; i < as.size(); ++i)
                for (std::size_t j = i; j < as.size(); ++j)
                    CHECK(chi_arch_pairwise(p, i, j) ==
                          chi.chi.chi_e.at(i) * chi.chi.chi_e.at(j));
        }
    }
}

TEST_CASE("tame distinguished character via mu-pairing") {
    // q=5 pools; exactly two matched pairs among three summands each
    std::vector<TameChar> ms = {TameChar::conjugate_symplectic(5, 4),
                                TameChar::conjugate_symplectic(5, 8),
                                TameChar::conjugate_symplectic(5, 12)};
    std::vector<TameChar> ns = {TameChar::conjugate_orthogonal(5, 20),
                                TameChar::conjugate_orthogonal(5, 16),
                                TameChar::conjugate_orthogonal(5, 0)};
    ParamPair p = ParamPair::unramified_tame(ms, ns);
    TameChi chi = chi_tame(p);
    CHECK(chi.p == 2);
    CHECK(chi.chi.chi_e.signs ==
          std::vector<Sign>{Sign::minus(), Sign::minus(), Sign::plus()});
    CHECK(chi.chi.chi_f.signs ==
          std::vector<Sign>{Sign::minus(), Sign::minus(), Sign::plus()});
    CHECK(chi.chi.central_e() == Sign::plus());
    CHECK(chi.chi.central_f() == Sign::plus());
    // the reordering pairs alpha_k with the beta that multiplies to mu
    for (int k = 0; k < chi.p; ++k)
        CHECK(product_is_mu(ms[chi.order_m[k]], ns[chi.order_n[k]]));

    // no matches
    ParamPair none = ParamPair::unramified_tame(
        {TameChar::conjugate_symplectic(5, 4)}, {TameChar::conjugate_orthogonal(5, 4)});
    TameChi chi_none = chi_tame(none);
    CHECK(chi_none.p == 0);
    CHECK(chi_none.chi.chi_e.at(0) == Sign::plus());
    CHECK(chi_none.chi.chi_f.at(0) == Sign::plus());

    // one matched pair: central value -1
    ParamPair one = ParamPair::unramified_tame({TameChar::mu(3)}, {TameChar::trivial(3)});
    TameChi chi_one = chi_tame(one);
    CHECK(chi_one.p == 1);
    CHECK(chi_one.chi.central_e() == Sign::minus());
    CHECK(chi_one.chi.central_f() == Sign::minus());
}

TEST_CASE("epsilon-product path") {
    // single tame factor: chi(e_1) = tame_epsilon(mu) = -1
    ParamPair p = ParamPair::unramified_tame({TameChar::mu(3)}, {TameChar::trivial(3)});
    DistinguishedChar chi = chi_general_from_epsilons(p);
    CHECK(chi.chi_e.at(0) == Sign::minus());
    CHECK(chi.chi_f.at(0) == Sign::minus());

    // archimedean pairs: identical to the counting path
    ParamPair arch =
        ParamPair::archimedean({h(1), h(-3)}, {HalfInt::whole(1), HalfInt::whole(-1)});
    DistinguishedChar general = chi_general_from_epsilons(arch);
    ArchChi counted = chi_arch(arch);
    CHECK(general.chi_e == counted.chi.chi_e);
    CHECK(general.chi_f == counted.chi.chi_f);

    // tame pairs: identical to the mu-pairing path in original coordinates
    std::vector<TameChar> ms = {TameChar::conjugate_symplectic(3, 2), TameChar::mu(3)};
    std::vector<TameChar> ns = {TameChar::conjugate_orthogonal(3, 6), TameChar::trivial(3)};
    ParamPair tame = ParamPair::unramified_tame(ms, ns);
    TameChi paired = chi_tame(tame);
    DistinguishedChar via_eps = chi_general_from_epsilons(tame);
    CHECK(via_eps.chi_e == paired.chi_e_original);
    CHECK(via_eps.chi_f == paired.chi_f_original);
    CHECK(paired.p == 2);
}
