#include "packets/job.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "packets/arch_packet.hpp"
#include "packets/compact_branching.hpp"
#include "packets/dist_char.hpp"
#include "packets/epsilon.hpp"
#include "packets/errors.hpp"
#include "packets/finite_gl.hpp"
#include "packets/finite_unitary.hpp"
#include "packets/gl_oracle.hpp"
#include "packets/verify.hpp"

namespace packets::cli {

std::string command_name(Command c) {
    switch (c) {
        case Command::Epsilon: return "epsilon";
        case Command::DistChar: return "dist-char";
        case Command::RealPacket: return "real-packet";
        case Command::CompactBranch: return "compact-branch";
        case Command::GlBranch: return "gl-branch";
        case Command::UnitaryDepth0: return "unitary-depth0";
        case Command::VerifyAll: return "verify-all";
    }
    throw InternalError("unreachable command");
}

namespace {

Command command_from_name(const std::string& name) {
    for (Command c : {Command::Epsilon, Command::DistChar, Command::RealPacket,
                      Command::CompactBranch, Command::GlBranch, Command::UnitaryDepth0,
                      Command::VerifyAll})
        if (command_name(c) == name) return c;
    throw ParameterError("unknown command '" + name + "'");
}

// Allowed parameter keys per command; "format" is always accepted.
const std::set<std::string>& allowed_keys(Command c) {
    static const std::map<Command, std::set<std::string>> table = {
        {Command::Epsilon, {"case", "a", "q", "c", "f", "n"}},
        {Command::DistChar, {"case", "q", "m", "n"}},
        {Command::RealPacket, {"m", "n"}},
        {Command::CompactBranch, {"n", "lambda", "mu"}},
        {Command::GlBranch, {"pi", "mu", "q"}},
        {Command::UnitaryDepth0, {"dim", "q", "m", "n"}},
        {Command::VerifyAll, {"bound", "threads", "instances", "seed"}},
    };
    return table.at(c);
}

long parse_long(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(value, &used);
    } catch (const std::exception&) {
        throw ParameterError("key '" + key + "': '" + value + "' is not an integer");
    }
    if (used != value.size())
        throw ParameterError("key '" + key + "': '" + value + "' is not an integer");
    return v;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string current;
    for (char ch : value) {
        if (ch == ',') {
            items.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty() || !items.empty()) items.push_back(current);
    if (value.empty()) items.clear();
    return items;
}

std::vector<HalfInt> parse_half_list(const std::string& key, const std::string& value) {
    std::vector<HalfInt> out;
    for (const std::string& item : split_list(value)) {
        if (item.empty()) throw ParameterError("key '" + key + "': empty list item");
        out.push_back(HalfInt::parse(item));
    }
    return out;
}

std::vector<long> parse_long_list(const std::string& key, const std::string& value) {
    std::vector<long> out;
    for (const std::string& item : split_list(value)) out.push_back(parse_long(key, item));
    return out;
}

const std::string& require(const JobSpec& job, const std::string& key) {
    auto it = job.params.find(key);
    if (it == job.params.end())
        throw ParameterError("missing required key '" + key + "' for command " +
                             command_name(job.command));
    return it->second;
}

// Accumulates rows and renders the two output formats. Machine output is a
// stable key=value schema: the input echo first, then one
// result.<i>.<field>=<value> line per row field, then result.status and
// result.exit.
class ReportBuilder {
  public:
    explicit ReportBuilder(const JobSpec& job) : job_(job) {}

    void row(std::vector<std::pair<std::string, std::string>> fields) {
        for (auto& [k, v] : fields) {
            // machine output is line-oriented; values must stay on one line
            std::replace(v.begin(), v.end(), '\n', ';');
        }
        rows_.push_back(std::move(fields));
    }

    Report finish(int exit_code) const {
        Report report;
        report.exit_code = exit_code;

        std::ostringstream machine;
        machine << "command=" << command_name(job_.command) << "\n";
        for (const auto& [k, v] : job_.params) machine << k << "=" << v << "\n";
        machine << "format=" << (job_.format == OutputFormat::Machine ? "machine" : "table")
                << "\n";
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [k, v] : rows_[i])
                machine << "result." << (i + 1) << "." << k << "=" << v << "\n";
        machine << "result.status=" << (exit_code == 0 ? "ok" : "fail") << "\n";
        machine << "result.exit=" << exit_code << "\n";
        report.machine_text = machine.str();

        std::ostringstream table;
        table << "job: " << command_name(job_.command) << "\n";
        for (const auto& [k, v] : job_.params) table << "  " << k << " = " << v << "\n";
        if (!rows_.empty()) table << "\n";
        for (const auto& row : rows_) {
            std::string line;
            for (const auto& [k, v] : row) {
                if (!line.empty()) line += "  ";
                line += k + "=" + v;
            }
            table << "  " << line << "\n";
        }
        table << "\nstatus: " << (exit_code == 0 ? "ok" : "FAIL") << "\n";
        report.table_text = table.str();
        return report;
    }

  private:
    const JobSpec& job_;
    std::vector<std::vector<std::pair<std::string, std::string>>> rows_;
};

Report run_epsilon(const JobSpec& job) {
    ReportBuilder out(job);
    const std::string& kase = require(job, "case");
    if (kase == "arch") {
        HalfInt a = HalfInt::parse(require(job, "a"));
        Sign value = epsilon::arch_epsilon(a);
        out.row({{"kind", "epsilon"},
                 {"case", "arch"},
                 {"a", a.to_string()},
                 {"value", value.to_string()},
                 {"rule", "arch-sign-rule"}});
        return out.finish(0);
    }
    if (kase == "tame") {
        int q = static_cast<int>(parse_long("q", require(job, "q")));
        long c = parse_long("c", require(job, "c"));
        TameChar alpha = TameChar::conjugate_symplectic(q, c);
        Sign value = epsilon::tame_epsilon(alpha);
        out.row({{"kind", "epsilon"},
                 {"case", "tame"},
                 {"character", alpha.to_string()},
                 {"conductor", std::to_string(alpha.conductor())},
                 {"value", value.to_string()},
                 {"rule", "tame-conductor-rule"}});
        return out.finish(0);
    }
    if (kase == "twist") {
        long f = parse_long("f", require(job, "f"));
        long n = parse_long("n", require(job, "n"));
        Sign value = epsilon::unramified_twist_epsilon(f, n);
        out.row({{"kind", "epsilon"},
                 {"case", "twist"},
                 {"f", std::to_string(f)},
                 {"n", std::to_string(n)},
                 {"value", value.to_string()},
                 {"rule", "unramified-twist"}});
        return out.finish(0);
    }
    throw ParameterError("epsilon case must be arch, tame or twist, got '" + kase + "'");
}

ParamPair tame_pair_from_params(const JobSpec& job) {
    int q = static_cast<int>(parse_long("q", require(job, "q")));
    std::vector<TameChar> ms, ns;
    for (long c : parse_long_list("m", require(job, "m")))
        ms.push_back(TameChar::conjugate_symplectic(q, c));
    for (long c : parse_long_list("n", require(job, "n")))
        ns.push_back(TameChar::conjugate_orthogonal(q, c));
    return ParamPair::unramified_tame(std::move(ms), std::move(ns));
}

Report run_dist_char(const JobSpec& job) {
    ReportBuilder out(job);
    const std::string& kase = require(job, "case");
    if (kase == "arch") {
        ParamPair p = ParamPair::archimedean(parse_half_list("m", require(job, "m")),
                                             parse_half_list("n", require(job, "n")));
        distchar::ArchChi chi = distchar::chi_arch(p);
        for (std::size_t i = 0; i < chi.chi.chi_e.size(); ++i)
            out.row({{"generator", chi.chi.chi_e.label(i)},
                     {"sign", chi.chi.chi_e.at(i).to_string()},
                     {"count", std::to_string(chi.m_counts[i])},
                     {"rule", "arch-count-rule"}});
        for (std::size_t j = 0; j < chi.chi.chi_f.size(); ++j)
            out.row({{"generator", chi.chi.chi_f.label(j)},
                     {"sign", chi.chi.chi_f.at(j).to_string()},
                     {"count", std::to_string(chi.n_counts[j])},
                     {"rule", "arch-count-rule"}});
        out.row({{"central", "(-1,1)"},
                 {"value", chi.chi.central_e().to_string()},
                 {"rule", "count-parity"}});
        out.row({{"central", "(1,-1)"},
                 {"value", chi.chi.central_f().to_string()},
                 {"rule", "count-parity"}});
        distchar::DistinguishedChar general = distchar::chi_general_from_epsilons(p);
        bool agree = general.chi_e == chi.chi.chi_e && general.chi_f == chi.chi.chi_f;
        out.row({{"paths-agree", agree ? "yes" : "no"}, {"rule", "epsilon-product"}});
        return out.finish(agree ? 0 : 1);
    }
    if (kase == "tame") {
        ParamPair p = tame_pair_from_params(job);
        distchar::TameChi chi = distchar::chi_tame(p);
        for (std::size_t i = 0; i < chi.chi_e_original.size(); ++i)
            out.row({{"generator", chi.chi_e_original.label(i)},
                     {"sign", chi.chi_e_original.at(i).to_string()},
                     {"rule", "mu-pairing"}});
        for (std::size_t j = 0; j < chi.chi_f_original.size(); ++j)
            out.row({{"generator", chi.chi_f_original.label(j)},
                     {"sign", chi.chi_f_original.at(j).to_string()},
                     {"rule", "mu-pairing"}});
        out.row({{"p", std::to_string(chi.p)}, {"rule", "mu-pairing"}});
        std::string order_m, order_n;
        for (std::size_t k = 0; k < chi.order_m.size(); ++k)
            order_m += (k ? "," : "") + std::to_string(chi.order_m[k] + 1);
        for (std::size_t k = 0; k < chi.order_n.size(); ++k)
            order_n += (k ? "," : "") + std::to_string(chi.order_n[k] + 1);
        out.row({{"reordering-m", order_m}, {"reordering-n", order_n}, {"rule", "mu-pairing"}});
        out.row({{"central", "(-1,1)"},
                 {"value", chi.chi.central_e().to_string()},
                 {"rule", "pair-count-parity"}});
        out.row({{"central", "(1,-1)"},
                 {"value", chi.chi.central_f().to_string()},
                 {"rule", "pair-count-parity"}});
        distchar::DistinguishedChar general = distchar::chi_general_from_epsilons(p);
        bool agree =
            general.chi_e == chi.chi_e_original && general.chi_f == chi.chi_f_original;
        out.row({{"paths-agree", agree ? "yes" : "no"}, {"rule", "epsilon-product"}});
        return out.finish(agree ? 0 : 1);
    }
    throw ParameterError("dist-char case must be arch or tame, got '" + kase + "'");
}

std::string bools_to_string(const std::vector<bool>& v) {
    std::string out;
    for (bool b : v) out += b ? "c" : ".";
    return out.empty() ? "-" : out;
}

Report run_real_packet(const JobSpec& job) {
    ReportBuilder out(job);
    ParamPair p = ParamPair::archimedean(parse_half_list("m", require(job, "m")),
                                         parse_half_list("n", require(job, "n")));
    archpkt::ArchPacketDatum datum = archpkt::make_arch_packet(p);
    std::string sa, sb;
    for (std::size_t i = 0; i < datum.sorted_a.size(); ++i)
        sa += (i ? "," : "") + datum.sorted_a[i].to_string();
    for (std::size_t i = 0; i < datum.sorted_b.size(); ++i)
        sb += (i ? "," : "") + datum.sorted_b[i].to_string();
    out.row({{"side", "e"},
             {"sorted", sa},
             {"chi", datum.chi_e.to_string()},
             {"compact-walls", bools_to_string(datum.compact_simple_e)},
             {"signature", std::to_string(datum.signature_e.a) + "+" +
                               std::to_string(datum.signature_e.b)},
             {"rule", "compact-wall-rule"}});
    out.row({{"side", "f"},
             {"sorted", sb},
             {"chi", datum.chi_f.to_string()},
             {"compact-walls", bools_to_string(datum.compact_simple_f)},
             {"signature", std::to_string(datum.signature_f.a) + "+" +
                               std::to_string(datum.signature_f.b)},
             {"rule", "compact-wall-rule"}});
    return out.finish(0);
}

Report run_compact_branch(const JobSpec& job) {
    ReportBuilder out(job);
    compact::CompactParams p;
    p.n = static_cast<int>(parse_long("n", require(job, "n")));
    p.lambda = parse_half_list("lambda", require(job, "lambda"));
    p.mu = parse_half_list("mu", require(job, "mu"));
    compact::require_valid(p);

    bool inter = compact::interlaces(p);
    bool pattern = true;
    for (int k = 1; k <= p.n + 1; ++k) {
        Sign got = compact::per_k_epsilon(p, k);
        Sign expected = Sign::of_parity(p.n - k + 1);
        if (got != expected) pattern = false;
        out.row({{"k", std::to_string(k)},
                 {"epsilon", got.to_string()},
                 {"interlacing-pattern", expected.to_string()},
                 {"rule", "per-k-sign"}});
    }
    Sign total = compact::total_epsilon(p);
    out.row({{"total", total.to_string()},
             {"quasi-split-table", compact::quasi_split_sign_table(p.n).to_string()},
             {"rule", "total-sign"}});
    out.row({{"interlaces", inter ? "yes" : "no"}, {"rule", "interlacing"}});
    // interlacing and the epsilon pattern must say the same thing
    int exit_code = (inter == pattern) ? 0 : 1;
    if (exit_code == 1)
        out.row({{"counterexample", "interlacing and epsilon pattern disagree"},
                 {"rule", "cross-validation"}});
    return out.finish(exit_code);
}

gl::ProductRep parse_product(const std::string& key, const std::string& value, int q_tag) {
    gl::ProductRep rep;
    for (const std::string& item : split_list(value)) {
        if (item.empty()) throw ParameterError("key '" + key + "': empty factor");
        gl::CuspidalLabel label;
        std::size_t colon = item.find(':');
        label.id = item.substr(0, colon == std::string::npos ? item.size() : colon);
        label.degree = colon == std::string::npos
                           ? 1
                           : static_cast<int>(parse_long(key, item.substr(colon + 1)));
        label.q = q_tag;
        rep.factors.push_back(std::move(label));
    }
    return rep;
}

Report run_gl_branch(const JobSpec& job) {
    ReportBuilder out(job);
    bool with_oracle = job.params.count("q") > 0;
    int q_tag = with_oracle ? static_cast<int>(parse_long("q", require(job, "q"))) : 0;

    gl::ProductRep pi = parse_product("pi", require(job, "pi"), q_tag);
    gl::ProductRep mu = parse_product("mu", require(job, "mu"), q_tag);
    long formula = gl::hom_multiplicity(pi, mu);
    out.row({{"pi", pi.to_string()},
             {"mu", mu.to_string()},
             {"multiplicity", std::to_string(formula)},
             {"rule", "multiplicity-product"}});

    int exit_code = 0;
    if (with_oracle) {
        std::vector<int> pi_exps, mu_exps;
        for (const gl::CuspidalLabel& f : pi.factors) {
            if (f.degree != 1)
                throw ParameterError("the oracle handles degree-1 factors only");
            pi_exps.push_back(static_cast<int>(parse_long("pi", f.id)));
        }
        for (const gl::CuspidalLabel& f : mu.factors) {
            if (f.degree != 1)
                throw ParameterError("the oracle handles degree-1 factors only");
            mu_exps.push_back(static_cast<int>(parse_long("mu", f.id)));
        }
        const gl::FiniteGl& big = gl::FiniteGl::get(pi.total_degree(), q_tag);
        const gl::FiniteGl& small = gl::FiniteGl::get(mu.total_degree(), q_tag);
        long oracle = gl::hom_dimension(gl::induced_character(big, pi_exps),
                                        gl::induced_character(small, mu_exps));
        bool match = oracle == formula;
        out.row({{"oracle", std::to_string(oracle)},
                 {"match", match ? "yes" : "no"},
                 {"rule", "induced-character-pairing"}});
        if (!match) exit_code = 1;
    }
    return out.finish(exit_code);
}

Report run_unitary_depth0(const JobSpec& job) {
    ReportBuilder out(job);
    if (job.params.count("dim")) {
        if (job.params.count("q") || job.params.count("m") || job.params.count("n"))
            throw ParameterError("unitary-depth0 takes either dim=... or q=/m=/n=, not both");
        int dim = static_cast<int>(parse_long("dim", require(job, "dim")));
        for (const unitary::Embedding& e : unitary::enumerate_packet(dim)) {
            unitary::ReductiveQuotient rq = unitary::reductive_quotient(e);
            out.row({{"embedding", e.to_string()},
                     {"quotient", "U" + std::to_string(rq.p) + "xU" +
                                      std::to_string(rq.n_minus_p)},
                     {"hyperspecial", rq.hyperspecial ? "yes" : "no"},
                     {"rule", "packet-enumeration"}});
        }
        return out.finish(0);
    }

    ParamPair p = tame_pair_from_params(job);
    unitary::DistinguishedEmbedding emb = unitary::distinguished_embedding(p);
    unitary::ReductiveQuotient qw = unitary::reductive_quotient(emb.w);
    unitary::ReductiveQuotient qw0 = unitary::reductive_quotient(emb.w0);
    out.row({{"group", "U(W)"},
             {"embedding", emb.w.to_string()},
             {"quotient", "U" + std::to_string(qw.p) + "xU" + std::to_string(qw.n_minus_p)},
             {"rule", "reductive-quotient"}});
    out.row({{"group", "U(W0)"},
             {"embedding", emb.w0.to_string()},
             {"quotient", "U" + std::to_string(qw0.p) + "xU" + std::to_string(qw0.n_minus_p)},
             {"rule", "reductive-quotient"}});
    out.row({{"p", std::to_string(emb.p)}, {"rule", "mu-pairing"}});

    int exit_code = 0;
    if (p.m_size() % 2 != p.n_size() % 2) {
        unitary::DepthZeroReport rep = unitary::depth_zero_consistency(p);
        out.row({{"residual-m", rep.residual_m.to_string()},
                 {"residual-n", rep.residual_n.to_string()},
                 {"disjoint", rep.disjoint ? "yes" : "no"},
                 {"consistency", rep.passed ? "pass" : "fail"},
                 {"rule", "support-disjointness"}});
        if (!rep.passed) exit_code = 1;
    } else {
        out.row({{"consistency", "skipped"},
                 {"reason", "|M| and |N| have equal parity (not a Bessel pair)"},
                 {"rule", "support-disjointness"}});
    }
    return out.finish(exit_code);
}

Report run_verify_all(const JobSpec& job) {
    ReportBuilder out(job);
    HalfInt bound = job.params.count("bound") ? HalfInt::parse(job.params.at("bound"))
                                              : HalfInt::from_twice(9);
    int threads = job.params.count("threads")
                      ? static_cast<int>(parse_long("threads", job.params.at("threads")))
                      : 1;
    int instances = job.params.count("instances")
                        ? static_cast<int>(parse_long("instances", job.params.at("instances")))
                        : 1000;
    unsigned seed = job.params.count("seed")
                        ? static_cast<unsigned>(parse_long("seed", job.params.at("seed")))
                        : 12345u;

    std::vector<verify::SweepResult> results;
    results.push_back(verify::epsilon_closed_forms());
    results.push_back(verify::chi_path_equality());
    results.push_back(verify::tame_central_identity());
    results.push_back(verify::interlacing_epsilon(4, bound, threads));
    results.push_back(verify::gl_formula_vs_oracle());
    results.push_back(verify::gl_restriction_identity());
    results.push_back(verify::depth_zero_bookkeeping(instances, {3, 5}, 5, seed));

    long total_failures = 0;
    for (const verify::SweepResult& r : results) {
        total_failures += r.failures;
        out.row({{"sweep", r.name},
                 {"instances", std::to_string(r.instances)},
                 {"failures", std::to_string(r.failures)},
                 {"verdict", r.passed() ? "pass" : "fail"},
                 {"rule", "exhaustive-sweep"}});
        for (const std::string& note : r.notes)
            out.row({{"sweep", r.name}, {"counterexample", note}, {"rule", "exhaustive-sweep"}});
    }
    return out.finish(total_failures == 0 ? 0 : 1);
}

} // namespace

JobSpec parse_job(const std::string& text) {
    JobSpec job;
    bool saw_command = false;
    bool saw_format = false;
    std::map<std::string, std::pair<int, int>> positions; // key -> line/col for diagnostics

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            if (line[pos] == '#') break; // comment to end of line
            std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            std::string token = line.substr(start, pos - start);
            std::string where =
                "line " + std::to_string(line_no) + ", column " + std::to_string(start + 1);

            std::size_t eq = token.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParameterError(where + ": expected key=value, got '" + token + "'");
            std::string key = token.substr(0, eq);
            std::string value = token.substr(eq + 1);

            if (key.rfind("result.", 0) == 0) continue; // output namespace, skipped
            if (key == "command") {
                job.command = command_from_name(value);
                saw_command = true;
            } else if (key == "format") {
                if (value == "table") job.format = OutputFormat::Table;
                else if (value == "machine") job.format = OutputFormat::Machine;
                else throw ParameterError(where + ": format must be table or machine");
                saw_format = true;
            } else {
                if (job.params.count(key))
                    throw ParameterError(where + ": duplicate key '" + key + "'");
                job.params[key] = value;
                positions[key] = {line_no, static_cast<int>(start + 1)};
            }
        }
    }
    (void)saw_format;
    if (!saw_command) throw ParameterError("missing required key 'command'");

    const std::set<std::string>& ok = allowed_keys(job.command);
    for (const auto& [key, value] : job.params) {
        if (!ok.count(key)) {
            auto [l, c] = positions[key];
            throw ParameterError("line " + std::to_string(l) + ", column " + std::to_string(c) +
                                 ": unknown key '" + key + "' for command " +
                                 command_name(job.command));
        }
    }
    return job;
}

Report run_job(const JobSpec& job) {
    try {
        switch (job.command) {
            case Command::Epsilon: return run_epsilon(job);
            case Command::DistChar: return run_dist_char(job);
            case Command::RealPacket: return run_real_packet(job);
            case Command::CompactBranch: return run_compact_branch(job);
            case Command::GlBranch: return run_gl_branch(job);
            case Command::UnitaryDepth0: return run_unitary_depth0(job);
            case Command::VerifyAll: return run_verify_all(job);
        }
        throw InternalError("unreachable command");
    } catch (const Error& e) {
        ReportBuilder out(job);
        out.row({{"error", e.what()}, {"rule", "diagnostic"}});
        return out.finish(2);
    }
}

} // namespace packets::cli
