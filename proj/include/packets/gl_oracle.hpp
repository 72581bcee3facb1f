#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "packets/errors.hpp"

namespace packets::gl {

// Dense matrix over F_q with n <= 4, entries 0..q-1.
struct Mat {
    std::uint8_t n = 0;
    std::array<std::uint8_t, 16> a{};

    int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    void set(int i, int j, int v) { a[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(v); }

    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

// A fully enumerated GL_n(F_q), q prime, with cached conjugacy classes.
// Group tables are built once behind a registry and shared read-only, so
// lookups are safe for concurrent use.
class FiniteGl {
  public:
    static constexpr long max_order = 25000;

    static long order_formula(int n, int q);
    // Cached accessor; throws ResourceError when the order exceeds
    // max_order and ParameterError for invalid (n, q).
    static const FiniteGl& get(int n, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    long order() const { return static_cast<long>(elements_.size()); }

    const std::vector<Mat>& elements() const { return elements_; }
    long index_of(const Mat& g) const;
    long inverse_index(long idx) const { return inverse_[idx]; }

    int class_count() const { return static_cast<int>(class_rep_.size()); }
    int class_of(long element_index) const { return class_of_[element_index]; }
    const Mat& class_rep(int c) const { return elements_[class_rep_[c]]; }
    long class_size(int c) const { return class_size_[c]; }

    Mat identity() const;
    Mat mul(const Mat& x, const Mat& y) const;

    // Discrete log in F_q^x for a fixed primitive root (u in 1..q-1).
    int unit_dlog(int u) const { return unit_dlog_[u]; }

  private:
    FiniteGl(int n, int q);
    void enumerate_elements();
    void build_classes();

    long code_of(const Mat& g) const; // base-q digit encoding of the entries

    int n_, q_;
    std::vector<Mat> elements_;
    std::vector<long> code_to_index_; // size q^(n*n), -1 for non-elements
    std::vector<long> inverse_;
    std::vector<int> class_of_;
    std::vector<long> class_rep_;
    std::vector<long> class_size_;
    std::vector<int> unit_dlog_;
    std::vector<Mat> generators_;
};

// Complex-valued function constant on conjugacy classes. Values of
// characters of actual representations are algebraic integers; every
// integrality decision in this module goes through a 1e-6 rounding gate,
// so numerical noise can never silently change a multiplicity.
struct ClassFunction {
    const FiniteGl* group = nullptr;
    std::vector<std::complex<double>> values; // one per conjugacy class

    std::complex<double> at_class(int c) const { return values[c]; }
    std::complex<double> at(const Mat& g) const {
        return values[group->class_of(group->index_of(g))];
    }
};

ClassFunction trivial_character(const FiniteGl& G);
ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
double max_abs_difference(const ClassFunction& a, const ClassFunction& b);

// <a, b> = (1/|G|) sum_g a(g) conj(b(g)).
std::complex<double> inner_product(const ClassFunction& a, const ClassFunction& b);

// Rounds to the nearest integer; residue above tol (real or imaginary)
// raises NumericalIntegrityError.
long integer_gate(std::complex<double> v, double tol = 1e-6);

// Character of Ind_B^{GL_n}(chi_1 (x) ... (x) chi_n), the principal series
// attached to the characters of F_q^x with the given exponents (taken mod
// q-1). Computed by direct summation over the group.
ClassFunction induced_character(const FiniteGl& G, const std::vector<int>& exponents);

// Character of the Gelfand-Graev representation ind_N^{GL_n}(psi_n), where
// psi_n(u) = psi_0(u_{1,2} + ... + u_{n-1,n}) and psi_0(x) = e(k x / q)
// with k = psi0_exponent. psi_0 must be nontrivial (k != 0 mod q).
ClassFunction gelfand_graev_character(const FiniteGl& G, int psi0_exponent = 1);

// Character of the representation parabolically induced from the block
// decomposition given by `blocks` (sizes summing to n, each block carrying
// a class function on its GL factor).
struct ParabolicBlock {
    int size = 0;
    ClassFunction chi;
};
ClassFunction parabolic_induced_character(const FiniteGl& G,
                                          const std::vector<ParabolicBlock>& blocks);

// g in GL_{n-1} placed in the top-left corner of GL_n with a 1 in the
// last diagonal entry.
Mat embed_corner(const FiniteGl& big, const Mat& small_g);

// Restriction of a class function on GL_n to the corner GL_{n-1}.
ClassFunction restrict_character(const ClassFunction& chi_big, const FiniteGl& small);

// dim Hom_{GL_{n-1}}(chi_big|, chi_small) by the brute-force pairing
// (1/|GL_{n-1}|) sum_g chi_big(embed g) conj(chi_small(g)), pushed through
// the integer gate.
long hom_dimension(const ClassFunction& chi_big, const ClassFunction& chi_small);

// Dimension of the i-th derivative of the representation with character
// chi: the multiplicity of the twisting character psi_i on the subgroup
// V_i = {[[1, v], [0, z]] : z unitriangular of size i}.
long twisted_jacquet_dimension(const ClassFunction& chi, int i, int psi0_exponent = 1);

} // namespace packets::gl
