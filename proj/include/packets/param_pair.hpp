#pragma once

#include <string>
#include <vector>

#include "packets/half_int.hpp"
#include "packets/tame_char.hpp"

namespace packets {

enum class FieldCase { Archimedean, UnramifiedTame };

// The joint parameter (M, N) of a product of unitary groups: M is a sum of
// distinct conjugate-symplectic one-dimensional summands, N a sum of
// distinct conjugate-orthogonal ones. Archimedean summands are exponents a
// with character (zbar/z)^a; tame summands are TameChars over a common q.
//
// Construction is permissive; validate_param_pair reports every violated
// invariant, and the engines refuse invalid pairs.
struct ParamPair {
    FieldCase field_case = FieldCase::Archimedean;

    // Archimedean case: exponents a_i (must be strict half-integers) and
    // b_j (must be integers).
    std::vector<HalfInt> arch_m;
    std::vector<HalfInt> arch_n;

    // Unramified tame case: alpha_i (conjugate-symplectic) and beta_j
    // (conjugate-orthogonal), all over one residue size q.
    std::vector<TameChar> tame_m;
    std::vector<TameChar> tame_n;

    static ParamPair archimedean(std::vector<HalfInt> m, std::vector<HalfInt> n);
    static ParamPair unramified_tame(std::vector<TameChar> m, std::vector<TameChar> n);

    std::size_t m_size() const {
        return field_case == FieldCase::Archimedean ? arch_m.size() : tame_m.size();
    }
    std::size_t n_size() const {
        return field_case == FieldCase::Archimedean ? arch_n.size() : tame_n.size();
    }
};

// Returns the list of violated invariants; empty means valid. Never throws,
// never mutates.
std::vector<std::string> validate_param_pair(const ParamPair& p);

// Throws ValidationError listing every violation when the pair is invalid.
void require_valid(const ParamPair& p);

} // namespace packets
