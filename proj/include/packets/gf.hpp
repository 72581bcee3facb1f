#pragma once

#include <vector>

#include "packets/errors.hpp"

namespace packets {

// Returns true and fills p, k when q = p^k is a prime power (k >= 1).
bool prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

// A small finite field GF(p^k), order <= 128. Elements are coded as
// integers 0..p^k-1 whose base-p digits are the coefficients of a
// polynomial over F_p, reduced modulo a fixed monic irreducible of degree
// k (found by brute-force search, smallest in lexicographic order, so the
// coding is deterministic). Multiplication runs through a precomputed
// discrete-log (Zech) table for a fixed generator of the unit group.
class Gf {
  public:
    Gf(int p, int k);
    static Gf of_order(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int order() const { return order_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;

    // Unit-group access: generator() has multiplicative order q-1,
    // dlog(generator()^e) == e mod (q-1).
    int generator() const { return gen_; }
    int unit_from_dlog(long long e) const;
    long long dlog(int a) const; // a != 0

    // The subfield F_p sits inside as the constants; for GF(q^2) built as
    // GF(p^{2k}) the norm-to-GF(q) unit subgroup is the set of elements
    // whose dlog is divisible by q+1. Callers work with dlogs directly.

  private:
    int p_, k_, order_;
    int gen_ = 0;
    std::vector<int> irreducible_; // coefficients, degree k, monic
    std::vector<int> exp_table_;   // exp_table_[e] = gen^e, e in [0, order-2]
    std::vector<long long> log_table_;

    int mul_raw(int a, int b) const; // polynomial multiplication mod irreducible
    void build_tables();
};

} // namespace packets
