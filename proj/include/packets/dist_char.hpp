#pragma once

#include <cstddef>
#include <vector>

#include "packets/param_pair.hpp"
#include "packets/sign.hpp"

namespace packets::distchar {

// The distinguished character chi = chi_e x chi_f on A_M x A_N, together
// with its values on the two central elements (-1,1) and (1,-1).
struct DistinguishedChar {
    SignChar chi_e; // on the generators e_i of A_M
    SignChar chi_f; // on the generators f_j of A_N

    Sign central_e() const { return chi_e.evaluate_on_minus_one(); } // chi(-1, 1)
    Sign central_f() const { return chi_f.evaluate_on_minus_one(); } // chi(1, -1)
};

struct ArchChi {
    DistinguishedChar chi;
    // The counts behind the signs: chi(e_i) = (-1)^{m_counts[i]},
    // chi(f_j) = (-1)^{n_counts[j]}.
    std::vector<int> m_counts;
    std::vector<int> n_counts;
};

// Archimedean distinguished character by the counting rule:
// m_i = #{r : a_i + b_r < 0}, n_j = #{r : a_r + b_j < 0}.
ArchChi chi_arch(const ParamPair& p);

// chi(e_i) * chi(e_j) computed directly from the sandwich count
// m_ij = #{r : a_i + b_r > 0 > a_j + b_r}. Requires both exponent lists in
// strictly descending order and i <= j (0-based); i == j gives +1.
Sign chi_arch_pairwise(const ParamPair& p, std::size_t i, std::size_t j);

// Tame distinguished character via the mu-pairing: after reordering so
// that alpha_k * beta_k = mu exactly for k < p, chi is -1 on the first p
// generators of each side and +1 afterwards.
struct TameChi {
    DistinguishedChar chi;        // in reordered (paired-first) coordinates
    SignChar chi_e_original;      // same character in the caller's order
    SignChar chi_f_original;
    int p = 0;                    // number of matched pairs
    std::vector<std::size_t> order_m; // reordered position k -> original index
    std::vector<std::size_t> order_n;
};

TameChi chi_tame(const ParamPair& p);

// The defining product formula chi(e_i) = prod_k epsilon(alpha_i beta_k),
// chi(f_j) = prod_k epsilon(alpha_k beta_j), evaluated summand by summand
// through the epsilon engine. Output is in the caller's summand order; it
// agrees with chi_arch on archimedean pairs and with chi_tame (under the
// reported reordering) on tame pairs.
DistinguishedChar chi_general_from_epsilons(const ParamPair& p);

} // namespace packets::distchar
