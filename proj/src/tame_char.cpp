#include "packets/tame_char.hpp"

#include "packets/gf.hpp"

namespace packets {

TameChar::TameChar(int q, std::int64_t unit_exp, RootOfUnity unif_val)
    : q_(q), unif_val_(unif_val) {
    if (!prime_power(q) || q > 9)
        throw ParameterError("residue size q must be a prime power <= 9, got " + std::to_string(q));
    std::int64_t modulus = static_cast<std::int64_t>(q) * q - 1;
    unit_exp_ = unit_exp % modulus;
    if (unit_exp_ < 0) unit_exp_ += modulus;
}

TameChar TameChar::conjugate_symplectic(int q, std::int64_t unit_exp) {
    TameChar c(q, unit_exp, RootOfUnity::minus_one());
    if (!c.is_conjugate_symplectic())
        throw PreconditionError("unit exponent " + std::to_string(unit_exp) +
                                " does not give a conjugate-symplectic character at q=" +
                                std::to_string(q));
    return c;
}

TameChar TameChar::conjugate_orthogonal(int q, std::int64_t unit_exp) {
    TameChar c(q, unit_exp, RootOfUnity::one());
    if (!c.is_conjugate_orthogonal())
        throw PreconditionError("unit exponent " + std::to_string(unit_exp) +
                                " does not give a conjugate-orthogonal character at q=" +
                                std::to_string(q));
    return c;
}

bool TameChar::is_conjugate_orthogonal() const {
    return unit_exp_ % (q_ - 1) == 0 && unif_val_.is_one();
}

bool TameChar::is_conjugate_symplectic() const {
    return unit_exp_ % (q_ - 1) == 0 && unif_val_.is_minus_one();
}

std::string TameChar::to_string() const {
    return "tame(q=" + std::to_string(q_) + ", c=" + std::to_string(unit_exp_) +
           ", pi->" + unif_val_.to_string() + ")";
}

TameChar tame_product(const TameChar& a, const TameChar& b) {
    if (a.q() != b.q())
        throw ParameterError("tame character product across different residue fields: q=" +
                             std::to_string(a.q()) + " vs q=" + std::to_string(b.q()));
    return TameChar(a.q(), a.unit_exp() + b.unit_exp(), a.unif_val() * b.unif_val());
}

bool product_is_mu(const TameChar& a, const TameChar& b) {
    if (a.q() != b.q())
        throw ParameterError("product_is_mu across different residue fields: q=" +
                             std::to_string(a.q()) + " vs q=" + std::to_string(b.q()));
    if (!a.is_conjugate_symplectic())
        throw PreconditionError("product_is_mu: first argument must be conjugate-symplectic");
    if (!b.is_conjugate_orthogonal())
        throw PreconditionError("product_is_mu: second argument must be conjugate-orthogonal");
    return tame_product(a, b) == TameChar::mu(a.q());
}

} // namespace packets
