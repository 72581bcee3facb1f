#include "packets/arch_packet.hpp"

#include <algorithm>

#include "packets/errors.hpp"

namespace packets::archpkt {

std::vector<bool> compact_simple_roots(const SignChar& chi) {
    std::vector<bool> walls;
    if (chi.size() < 2) return walls;
    walls.reserve(chi.size() - 1);
    for (std::size_t i = 0; i + 1 < chi.size(); ++i)
        walls.push_back((chi.at(i) * chi.at(i + 1)).is_minus());
    return walls;
}

bool compact_general_root(const SignChar& chi, std::size_t i, std::size_t j) {
    if (i >= j) throw ParameterError("compact_general_root requires i < j");
    if (j >= chi.size()) throw ParameterError("compact_general_root index out of range");
    return chi.at(i) * chi.at(j) == Sign::of_parity(static_cast<std::int64_t>(i + j));
}

UnorderedSignature infer_signature(const SignChar& chi) {
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        Sign t = chi.at(i) * Sign::of_parity(static_cast<std::int64_t>(i) + 1);
        (t.is_plus() ? plus : minus)++;
    }
    UnorderedSignature sig;
    sig.a = std::max(plus, minus);
    sig.b = std::min(plus, minus);
    return sig;
}

ArchPacketDatum make_arch_packet(const ParamPair& p) {
    if (p.field_case != FieldCase::Archimedean)
        throw PreconditionError("make_arch_packet requires an archimedean parameter pair");
    require_valid(p);

    ParamPair sorted = p;
    std::sort(sorted.arch_m.begin(), sorted.arch_m.end(),
              [](HalfInt x, HalfInt y) { return x > y; });
    std::sort(sorted.arch_n.begin(), sorted.arch_n.end(),
              [](HalfInt x, HalfInt y) { return x > y; });

    distchar::ArchChi chi = distchar::chi_arch(sorted);

    ArchPacketDatum out;
    out.sorted_a = sorted.arch_m;
    out.sorted_b = sorted.arch_n;
    out.chi_e = chi.chi.chi_e;
    out.chi_f = chi.chi.chi_f;
    out.compact_simple_e = compact_simple_roots(out.chi_e);
    out.compact_simple_f = compact_simple_roots(out.chi_f);
    out.signature_e = infer_signature(out.chi_e);
    out.signature_f = infer_signature(out.chi_f);
    return out;
}

} // namespace packets::archpkt
