#pragma once

#include <cstddef>
#include <vector>

#include "packets/dist_char.hpp"
#include "packets/half_int.hpp"
#include "packets/param_pair.hpp"
#include "packets/sign.hpp"

namespace packets::archpkt {

// Entry i is true iff the simple root wall e_i - e_{i+1} is compact in
// the chamber of the Harish-Chandra parameter, which happens exactly when
// chi(e_i) * chi(e_{i+1}) = -1. Fewer than two generators give an empty
// vector.
std::vector<bool> compact_simple_roots(const SignChar& chi);

// The general positive root e_i - e_j (i < j, 0-based): compact iff
// chi(e_i) * chi(e_j) = (-1)^{i+j}. The parity of i+j does not depend on
// whether indices are counted from 0 or 1.
bool compact_general_root(const SignChar& chi, std::size_t i, std::size_t j);

// Signature as an unordered pair: {a, b} with a >= b, a + b = n.
struct UnorderedSignature {
    int a = 0;
    int b = 0;
    bool operator==(const UnorderedSignature& o) const { return a == o.a && b == o.b; }
};

// The compactness pattern determines the signature of the unitary group
// only up to swapping the two blocks, so the pair comes back unordered:
// with t_i = chi(e_i) * (-1)^i (1-based), the blocks are {i : t_i = +1}
// and {i : t_i = -1}, and two coordinates lie in one block exactly when
// the root e_i - e_j is compact.
UnorderedSignature infer_signature(const SignChar& chi);

// Everything the real-place packet bookkeeping derives from one parameter:
// sorted Harish-Chandra data, the distinguished character, compact-wall
// patterns and the inferred signatures.
struct ArchPacketDatum {
    std::vector<HalfInt> sorted_a; // strictly descending strict half-integers
    std::vector<HalfInt> sorted_b; // strictly descending integers
    SignChar chi_e, chi_f;
    std::vector<bool> compact_simple_e, compact_simple_f;
    UnorderedSignature signature_e, signature_f;
};

// Sorts the parameter, evaluates chi and assembles the packet datum.
ArchPacketDatum make_arch_packet(const ParamPair& p);

} // namespace packets::archpkt
