#pragma once

#include <string>
#include <vector>

#include "packets/compact_branching.hpp"
#include "packets/half_int.hpp"

namespace packets::verify {

struct SweepResult {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::vector<std::string> notes; // counterexample descriptions, capped
    bool passed() const { return failures == 0; }
};

// Closed-form epsilon grid: archimedean signs for |a| <= bound, tame signs
// for every conjugate-symplectic character over all supported q (both
// conductors), each compared against the stated closed form.
SweepResult epsilon_closed_forms(HalfInt arch_bound = HalfInt::from_twice(19));

// Path equality of the distinguished character: the counting rule (arch),
// the mu-pairing rule (tame) and the epsilon-product definition must agree
// on exhaustive parameter sweeps.
SweepResult chi_path_equality(int max_m = 4, int max_n = 4,
                              HalfInt arch_bound = HalfInt::from_twice(7),
                              std::vector<int> tame_qs = {3, 5});

// Central-value identity on the tame sweep: prod chi(e_i) = prod chi(f_j)
// = (-1)^p.
SweepResult tame_central_identity(int max_m = 4, int max_n = 4,
                                  std::vector<int> tame_qs = {3, 5});

// Interlacing/epsilon cross-validation, wrapped as a sweep result.
SweepResult interlacing_epsilon(int max_n = 4, HalfInt bound = HalfInt::from_twice(9),
                                int threads = 1);

// Branching-multiplicity formula against the brute-force character oracle
// on every principal-series instance within the group size bound. Also
// requires that the sweep exercised a disjoint-support instance (value 1)
// and a repeated-factor instance (value 3).
SweepResult gl_formula_vs_oracle(std::vector<int> qs = {2, 3, 5}, int max_n = 4,
                                 long size_bound = 25000);

// Character identity for the restriction decomposition: the restricted
// character equals the sum of the induced-times-Gelfand-Graev term
// characters pointwise within 1e-6.
SweepResult gl_restriction_identity(std::vector<int> qs = {2, 3}, int max_n = 3);

// Random tame parameter pairs: the distinguished embedding reports the
// matched-pair count in both reductive quotients, and the depth-zero
// consistency check passes.
SweepResult depth_zero_bookkeeping(int instances = 1000, std::vector<int> qs = {3, 5},
                                   int max_size = 5, unsigned seed = 12345u);

} // namespace packets::verify
