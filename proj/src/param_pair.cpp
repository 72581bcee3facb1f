#include "packets/param_pair.hpp"

namespace packets {

ParamPair ParamPair::archimedean(std::vector<HalfInt> m, std::vector<HalfInt> n) {
    ParamPair p;
    p.field_case = FieldCase::Archimedean;
    p.arch_m = std::move(m);
    p.arch_n = std::move(n);
    return p;
}

ParamPair ParamPair::unramified_tame(std::vector<TameChar> m, std::vector<TameChar> n) {
    ParamPair p;
    p.field_case = FieldCase::UnramifiedTame;
    p.tame_m = std::move(m);
    p.tame_n = std::move(n);
    return p;
}

std::vector<std::string> validate_param_pair(const ParamPair& p) {
    std::vector<std::string> violations;

    if (p.field_case == FieldCase::Archimedean) {
        if (!p.tame_m.empty() || !p.tame_n.empty())
            violations.push_back("archimedean pair carries tame summands");
        for (std::size_t i = 0; i < p.arch_m.size(); ++i) {
            if (!p.arch_m[i].is_strict_half())
                violations.push_back("m_summands[" + std::to_string(i) + "] = " +
                                     p.arch_m[i].to_string() +
                                     " is not conjugate-symplectic (exponent must be a strict half-integer)");
        }
        for (std::size_t j = 0; j < p.arch_n.size(); ++j) {
            if (!p.arch_n[j].is_integer())
                violations.push_back("n_summands[" + std::to_string(j) + "] = " +
                                     p.arch_n[j].to_string() +
                                     " is not conjugate-orthogonal (exponent must be an integer)");
        }
        for (std::size_t i = 0; i < p.arch_m.size(); ++i)
            for (std::size_t j = i + 1; j < p.arch_m.size(); ++j)
                if (p.arch_m[i] == p.arch_m[j])
                    violations.push_back("m_summands duplicate exponent " + p.arch_m[i].to_string());
        for (std::size_t i = 0; i < p.arch_n.size(); ++i)
            for (std::size_t j = i + 1; j < p.arch_n.size(); ++j)
                if (p.arch_n[i] == p.arch_n[j])
                    violations.push_back("n_summands duplicate exponent " + p.arch_n[i].to_string());
        return violations;
    }

    if (!p.arch_m.empty() || !p.arch_n.empty())
        violations.push_back("tame pair carries archimedean summands");
    int q = 0;
    for (const auto& list : {&p.tame_m, &p.tame_n}) {
        for (const TameChar& c : *list) {
            if (q == 0) q = c.q();
            if (c.q() != q) {
                violations.push_back("summands do not share one residue size q");
                break;
            }
        }
    }
    for (std::size_t i = 0; i < p.tame_m.size(); ++i) {
        if (!p.tame_m[i].is_conjugate_symplectic())
            violations.push_back("m_summands[" + std::to_string(i) + "] = " +
                                 p.tame_m[i].to_string() + " is not conjugate-symplectic");
    }
    for (std::size_t j = 0; j < p.tame_n.size(); ++j) {
        if (!p.tame_n[j].is_conjugate_orthogonal())
            violations.push_back("n_summands[" + std::to_string(j) + "] = " +
                                 p.tame_n[j].to_string() + " is not conjugate-orthogonal");
    }
    for (std::size_t i = 0; i < p.tame_m.size(); ++i)
        for (std::size_t j = i + 1; j < p.tame_m.size(); ++j)
            if (p.tame_m[i] == p.tame_m[j])
                violations.push_back("m_summands duplicate character " + p.tame_m[i].to_string());
    for (std::size_t i = 0; i < p.tame_n.size(); ++i)
        for (std::size_t j = i + 1; j < p.tame_n.size(); ++j)
            if (p.tame_n[i] == p.tame_n[j])
                violations.push_back("n_summands duplicate character " + p.tame_n[i].to_string());
    return violations;
}

void require_valid(const ParamPair& p) {
    std::vector<std::string> violations = validate_param_pair(p);
    if (violations.empty()) return;
    std::string msg = "invalid parameter pair:";
    for (const std::string& v : violations) msg += "\n  - " + v;
    throw ValidationError(msg);
}

} // namespace packets
