#include "packets/epsilon.hpp"

#include "packets/errors.hpp"

namespace packets::epsilon {

Sign arch_epsilon(HalfInt a, const AdditiveCharVariant& psi) {
    if (psi.variant() != AdditiveCharCase::ArchimedeanStandard)
        throw UnsupportedCaseError("arch_epsilon requires the archimedean standard psi0");
    if (!a.is_strict_half())
        throw PreconditionError("arch_epsilon: exponent " + a.to_string() +
                                " is an integer, so the character is not conjugate-symplectic");
    return a.is_positive() ? Sign::plus() : Sign::minus();
}

Sign tame_epsilon(const TameChar& alpha, const AdditiveCharVariant& psi) {
    if (psi.variant() != AdditiveCharCase::UnramifiedLevelMinusOne)
        throw UnsupportedCaseError("tame_epsilon requires psi0 of level -1");
    if (!alpha.is_conjugate_symplectic())
        throw PreconditionError("tame_epsilon: " + alpha.to_string() +
                                " is not conjugate-symplectic");
    return Sign::of_parity(alpha.conductor() + 1);
}

Sign unramified_twist_epsilon(long beta_conductor, long n_psi) {
    if (beta_conductor < 0)
        throw ParameterError("conductor must be nonnegative, got " + std::to_string(beta_conductor));
    return Sign::of_parity(beta_conductor + n_psi);
}

} // namespace packets::epsilon
