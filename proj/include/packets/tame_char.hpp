#pragma once

#include <cstdint>
#include <string>

#include "packets/errors.hpp"
#include "packets/root_of_unity.hpp"

namespace packets {

// A tame character of the multiplicative group of the unramified quadratic
// extension k of a local field k0 with residue field of size q. Such a
// character is determined by its exponent on the residue units mu_{q^2-1}
// and its value at a fixed uniformizer of k0. Higher ramification is
// rejected by construction: this type cannot hold a wild character.
//
// q is restricted to prime powers <= 9 so that all unit groups stay
// enumerable for the exhaustive oracles.
class TameChar {
  public:
    TameChar(int q, std::int64_t unit_exp, RootOfUnity unif_val);

    // The unramified quadratic character: trivial on units, -1 at the
    // uniformizer. Conjugate-symplectic of conductor 0.
    static TameChar mu(int q) { return TameChar(q, 0, RootOfUnity::minus_one()); }
    static TameChar trivial(int q) { return TameChar(q, 0, RootOfUnity::one()); }

    // Builders that enforce the named predicate up front.
    static TameChar conjugate_symplectic(int q, std::int64_t unit_exp);
    static TameChar conjugate_orthogonal(int q, std::int64_t unit_exp);

    int q() const { return q_; }
    std::int64_t unit_exp() const { return unit_exp_; }
    const RootOfUnity& unif_val() const { return unif_val_; }

    // 0 when trivial on units (unramified), else 1.
    int conductor() const { return unit_exp_ == 0 ? 0 : 1; }

    // Trivial on k0^x: unit exponent divisible by q-1 and trivial at the
    // uniformizer.
    bool is_conjugate_orthogonal() const;

    // Restriction to k0^x equals the unramified quadratic class-field
    // character: unit exponent divisible by q-1 and value -1 at the
    // uniformizer.
    bool is_conjugate_symplectic() const;

    bool operator==(const TameChar& o) const {
        return q_ == o.q_ && unit_exp_ == o.unit_exp_ && unif_val_ == o.unif_val_;
    }
    bool operator!=(const TameChar& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    int q_;
    std::int64_t unit_exp_; // in [0, q^2-2]
    RootOfUnity unif_val_;
};

// Pointwise product of characters; both arguments must live over the same q.
TameChar tame_product(const TameChar& a, const TameChar& b);

// True iff a*b equals the unramified quadratic character mu. Requires a
// conjugate-symplectic and b conjugate-orthogonal (the setting in which
// the question is posed); violations are parameter/precondition errors.
bool product_is_mu(const TameChar& a, const TameChar& b);

} // namespace packets
