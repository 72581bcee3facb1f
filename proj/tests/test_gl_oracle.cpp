#include <doctest.h>

#include <complex>
#include <string>
#include <vector>

#include "packets/finite_gl.hpp"
#include "packets/gl_oracle.hpp"

using namespace packets;
using namespace packets::gl;

namespace {

ProductRep series(const std::vector<int>& exponents, int q) {
    ProductRep rep;
    for (int e : exponents) {
        CuspidalLabel label;
        label.degree = 1;
        label.id = std::to_string(((e % (q - 1)) + (q - 1)) % (q - 1));
        label.q = q;
        rep.factors.push_back(label);
    }
    return rep;
}

// Total dimension of the k-th derivative as the Leibnitz expansion
// predicts it: sum of the dimensions of the surviving products, each read
// off the oracle's induced character at the identity.
long derivative_dim_from_formula(const std::vector<int>& exponents, int q, int k) {
    long total = 0;
    for (const ProductRep& term : derivative_multiset(series(exponents, q), k)) {
        if (term.factors.empty()) {
            total += 1;
            continue;
        }
        const FiniteGl& g = FiniteGl::get(term.total_degree(), q);
        std::vector<int> es;
        for (const CuspidalLabel& f : term.factors) es.push_back(std::stoi(f.id));
        total += integer_gate(induced_character(g, es).at(g.identity()));
    }
    return total;
}

} // namespace

TEST_CASE("group enumeration and conjugacy classes") {
    CHECK(FiniteGl::order_formula(2, 3) == 48);
    CHECK(FiniteGl::order_formula(3, 2) == 168);
    CHECK(FiniteGl::order_formula(4, 2) == 20160);

    const FiniteGl& g23 = FiniteGl::get(2, 3);
    CHECK(g23.order() == 48);
    CHECK(g23.class_count() == 8); // q^2 - 1 classes for rank 2

    const FiniteGl& g22 = FiniteGl::get(2, 2);
    CHECK(g22.order() == 6);
    CHECK(g22.class_count() == 3);

    const FiniteGl& g25 = FiniteGl::get(2, 5);
    CHECK(g25.order() == 480);
    CHECK(g25.class_count() == 24);

    const FiniteGl& g32 = FiniteGl::get(3, 2);
    CHECK(g32.order() == 168);
    CHECK(g32.class_count() == 6); // q^3 - q classes for rank 3

    const FiniteGl& g33 = FiniteGl::get(3, 3);
    CHECK(g33.order() == 11232);
    CHECK(g33.class_count() == 24);

    long covered = 0;
    for (int c = 0; c < g33.class_count(); ++c) covered += g33.class_size(c);
    CHECK(covered == g33.order());

    // rank 4: 14 classes, one per rational canonical form over F_2
    // (3 quartic irreducibles + 2 cubics * (x+1) + 2 partitions on the
    // quadratic + 2 quadratic * (x+1)^2 shapes + 5 partitions of 4 on x+1)
    const FiniteGl& g42 = FiniteGl::get(4, 2);
    CHECK(g42.order() == 20160);
    CHECK(g42.class_count() == 14);

    CHECK_THROWS_AS(FiniteGl::get(3, 5), ResourceError);  // 1488000 elements
    CHECK_THROWS_AS(FiniteGl::get(2, 4), ParameterError); // prime q only
}

TEST_CASE("rank-1 induced character is the torus character") {
    const FiniteGl& g = FiniteGl::get(1, 5);
    ClassFunction chi = induced_character(g, {1});
    CHECK(chi.values.size() == 4);
    // the character is multiplicative of order 4 on F_5^x
    for (int c = 0; c < g.class_count(); ++c) {
        CHECK(std::abs(std::abs(chi.at_class(c)) - 1.0) < 1e-9);
    }
    ClassFunction triv = induced_character(g, {0});
    for (int c = 0; c < g.class_count(); ++c)
        CHECK(std::abs(chi.at_class(c) * chi.at_class(c) * chi.at_class(c) * chi.at_class(c) -
                       triv.at_class(c)) < 1e-9);
}

TEST_CASE("principal series dimension and irreducibility") {
    const FiniteGl& g = FiniteGl::get(2, 3);
    ClassFunction ps = induced_character(g, {0, 0});
    CHECK(integer_gate(ps.at(g.identity())) == 4); // |G/B| = q+1

    // Mackey: the self-inner-product counts the stabilizer of the torus
    // character in the Weyl group
    CHECK(integer_gate(inner_product(ps, ps)) == 2);
    ClassFunction ps_distinct = induced_character(g, {0, 1});
    CHECK(integer_gate(inner_product(ps_distinct, ps_distinct)) == 1); // irreducible

    const FiniteGl& g25 = FiniteGl::get(2, 5);
    ClassFunction ps_55 = induced_character(g25, {2, 2});
    CHECK(integer_gate(inner_product(ps_55, ps_55)) == 2);
}

TEST_CASE("Gelfand-Graev characters") {
    // rank 1: the regular representation of F_q^x
    const FiniteGl& g1 = FiniteGl::get(1, 3);
    ClassFunction gg1 = gelfand_graev_character(g1);
    CHECK(integer_gate(gg1.at(g1.identity())) == 2);
    long zero_checked = 0;
    for (int c = 0; c < g1.class_count(); ++c) {
        if (g1.class_rep(c) == g1.identity()) continue;
        CHECK(std::abs(gg1.at_class(c)) < 1e-9);
        ++zero_checked;
    }
    CHECK(zero_checked == 1);

    // dimension |GL_2(F_2)| / |N_2| = 3
    const FiniteGl& g22 = FiniteGl::get(2, 2);
    ClassFunction gg22 = gelfand_graev_character(g22);
    CHECK(integer_gate(gg22.at(g22.identity())) == 3);

    // dimension |GL_2(F_3)| / |N_2| = 16
    const FiniteGl& g23 = FiniteGl::get(2, 3);
    ClassFunction gg23 = gelfand_graev_character(g23);
    CHECK(integer_gate(gg23.at(g23.identity())) == 16);

    CHECK_THROWS_AS(gelfand_graev_character(g23, 3), PreconditionError); // trivial psi_0

    // any nontrivial psi_0 exponent gives a conjugate generic character,
    // hence the same induced character
    ClassFunction gg23b = gelfand_graev_character(g23, 2);
    CHECK(max_abs_difference(gg23, gg23b) < 1e-9);
}

TEST_CASE("restriction pairing on tiny groups") {
    // a 1-dimensional character restricted and paired with itself over
    // GL_1(F_2), the trivial group
    const FiniteGl& g12 = FiniteGl::get(1, 2);
    const FiniteGl& g22 = FiniteGl::get(2, 2);
    CHECK(hom_dimension(trivial_character(g22), trivial_character(g12)) == 1);

    ClassFunction ind22 = induced_character(g22, {0, 0});
    ClassFunction triv1 = induced_character(g12, {0});
    CHECK(hom_dimension(ind22, triv1) == 3); // 1 + multiplicity 2

    // pi = a x b with distinct characters of F_3^x, mu = a
    const FiniteGl& g23 = FiniteGl::get(2, 3);
    const FiniteGl& g13 = FiniteGl::get(1, 3);
    ClassFunction pi_char = induced_character(g23, {0, 1});
    ClassFunction mu_char = induced_character(g13, {0});
    CHECK(hom_dimension(pi_char, mu_char) == 2);
}

TEST_CASE("disjoint support via the rank-2 cuspidal of GL_2(F_2)") {
    // Over F_2 the only torus character is trivial, so a disjoint-support
    // pair needs the degree-2 cuspidal on the small side. It is reachable
    // without any character table: cuspidal = GG - (Ind_B(1) - 1).
    const FiniteGl& g32 = FiniteGl::get(3, 2);
    const FiniteGl& g22 = FiniteGl::get(2, 2);
    ClassFunction gg = gelfand_graev_character(g22);
    ClassFunction ind = induced_character(g22, {0, 0});
    ClassFunction cuspidal = cf_sub(cf_add(gg, trivial_character(g22)), ind);
    CHECK(integer_gate(cuspidal.at(g22.identity())) == 1); // dimension q-1
    CHECK(integer_gate(inner_product(cuspidal, cuspidal)) == 1);

    ClassFunction big = induced_character(g32, {0, 0, 0});
    CHECK(hom_dimension(big, cuspidal) == 1);
}

TEST_CASE("twisted Jacquet dimensions match the Leibnitz expansion") {
    // Pi = chi_0 x chi_0 x chi_1 on GL_3(F_3): derivative dimensions are
    // sums of flag counts over the surviving factors.
    const FiniteGl& g33 = FiniteGl::get(3, 3);
    ClassFunction chi = induced_character(g33, {0, 0, 1});
    long flags3 = 52; // (1+q)(1+q+q^2) at q=3
    long flags2 = 4;  // 1+q
    CHECK(twisted_jacquet_dimension(chi, 0) == flags3);
    CHECK(twisted_jacquet_dimension(chi, 1) == 3 * flags2); // three subsets of degree 1 removed
    CHECK(twisted_jacquet_dimension(chi, 2) == 3);          // three singleton leftovers
    CHECK(twisted_jacquet_dimension(chi, 3) == 1);          // the trivial rep of GL_0

    // ... and generically, against derivative_multiset itself
    for (int k = 0; k <= 3; ++k)
        CHECK(twisted_jacquet_dimension(chi, k) == derivative_dim_from_formula({0, 0, 1}, 3, k));
    ClassFunction chi32 = induced_character(FiniteGl::get(3, 2), {0, 0, 0});
    for (int k = 0; k <= 3; ++k)
        CHECK(twisted_jacquet_dimension(chi32, k) == derivative_dim_from_formula({0, 0, 0}, 2, k));

    // same bookkeeping on GL_2(F_5)
    const FiniteGl& g25 = FiniteGl::get(2, 5);
    ClassFunction chi2 = induced_character(g25, {1, 3});
    CHECK(twisted_jacquet_dimension(chi2, 0) == 6);
    CHECK(twisted_jacquet_dimension(chi2, 1) == 2);
    CHECK(twisted_jacquet_dimension(chi2, 2) == 1);
    for (int k = 0; k <= 2; ++k)
        CHECK(twisted_jacquet_dimension(chi2, k) == derivative_dim_from_formula({1, 3}, 5, k));

    // rank 4 at q=2: full principal series, all five derivative orders
    ClassFunction chi42 = induced_character(FiniteGl::get(4, 2), {0, 0, 0, 0});
    CHECK(integer_gate(chi42.at(FiniteGl::get(4, 2).identity())) == 315); // flag count
    for (int k = 0; k <= 4; ++k)
        CHECK(twisted_jacquet_dimension(chi42, k) ==
              derivative_dim_from_formula({0, 0, 0, 0}, 2, k));
}

TEST_CASE("parabolic induction generalizes the Borel case") {
    const FiniteGl& g23 = FiniteGl::get(2, 3);
    const FiniteGl& g13 = FiniteGl::get(1, 3);
    std::vector<ParabolicBlock> blocks;
    for (int e : {0, 1}) {
        ParabolicBlock b;
        b.size = 1;
        b.chi = induced_character(g13, {e});
        blocks.push_back(std::move(b));
    }
    ClassFunction via_blocks = parabolic_induced_character(g23, blocks);
    ClassFunction via_borel = induced_character(g23, {0, 1});
    CHECK(max_abs_difference(via_blocks, via_borel) < 1e-9);

    // a single full-size block is the identity operation
    std::vector<ParabolicBlock> whole(1);
    whole[0].size = 2;
    whole[0].chi = via_borel;
    CHECK(max_abs_difference(parabolic_induced_character(g23, whole), via_borel) < 1e-9);
}

TEST_CASE("integrality gate") {
    CHECK(integer_gate({2.0000000001, 0.0}) == 2);
    CHECK_THROWS_AS(integer_gate({2.5, 0.0}), NumericalIntegrityError);
    CHECK_THROWS_AS(integer_gate({2.0, 0.1}), NumericalIntegrityError);
}
