#pragma once

#include <optional>
#include <utility>

#include "packets/half_int.hpp"
#include "packets/sign.hpp"
#include "packets/tame_char.hpp"

namespace packets::epsilon {

// The two additive-character normalizations with a closed-form local root
// number. Nothing else is constructible: any other normalization is out of
// scope and must be a hard error, never an approximation.
enum class AdditiveCharCase {
    // psi0(z) = e^{2 pi (zbar - z)} on C, trivial on R.
    ArchimedeanStandard,
    // psi0 trivial on k0 and on the maximal ideal of A_k, nontrivial on
    // A_k; level n(psi0) = -1.
    UnramifiedLevelMinusOne,
};

class AdditiveCharVariant {
  public:
    static AdditiveCharVariant archimedean_standard() {
        return AdditiveCharVariant(AdditiveCharCase::ArchimedeanStandard);
    }
    static AdditiveCharVariant unramified_level_minus_one() {
        return AdditiveCharVariant(AdditiveCharCase::UnramifiedLevelMinusOne);
    }

    AdditiveCharCase variant() const { return case_; }

    // Report-only note recording a rescaling of psi0 (e.g. the generic
    // normalization obtained by scaling by 1/2). Carried for display; no
    // computation depends on it.
    std::optional<std::pair<long, long>> scale_note;

  private:
    explicit AdditiveCharVariant(AdditiveCharCase c) : case_(c) {}
    AdditiveCharCase case_;
};

// Root number of the conjugate-symplectic character (zbar/z)^a over C/R
// with the standard psi0: +1 for a > 0, -1 for a < 0. Conjugate-symplectic
// forces a to be a strict half-integer, so a = 0 cannot occur.
Sign arch_epsilon(HalfInt a,
                  const AdditiveCharVariant& psi = AdditiveCharVariant::archimedean_standard());

// Root number of a conjugate-symplectic tame character over the unramified
// quadratic extension with psi0 of level -1: (-1)^{f(alpha)+1}, so -1 for
// the unramified character mu (conductor 0) and +1 for conductor 1.
Sign tame_epsilon(const TameChar& alpha,
                  const AdditiveCharVariant& psi = AdditiveCharVariant::unramified_level_minus_one());

// The unramified-twist correction mu(pi^{f(beta)+n(psi0)}) = (-1)^{f+n}
// appearing in epsilon(beta*mu) = epsilon(beta) * mu(pi^{f(beta)+n(psi0)}).
Sign unramified_twist_epsilon(long beta_conductor, long n_psi);

} // namespace packets::epsilon
