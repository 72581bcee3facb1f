#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace packets::cli {

enum class Command {
    Epsilon,
    DistChar,
    RealPacket,
    CompactBranch,
    GlBranch,
    UnitaryDepth0,
    VerifyAll,
};

enum class OutputFormat { Table, Machine };

std::string command_name(Command c);

// A validated job: the command, its key/value parameters and the output
// format. Unknown keys are rejected at parse time (strict parsing).
struct JobSpec {
    Command command = Command::Epsilon;
    std::map<std::string, std::string> params;
    OutputFormat format = OutputFormat::Table;
};

// Parses a line-oriented key=value document (inline flags are the same
// tokens on one line). '#' starts a comment; keys under the "result."
// namespace are output fields and are skipped, so a machine report can be
// fed back in and reproduces its own job. Errors carry line/column
// positions.
JobSpec parse_job(const std::string& text);

struct Report {
    int exit_code = 0; // 0 success, 1 counterexample/consistency failure, 2 usage error
    std::string table_text;
    std::string machine_text;
};

// Executes the job and renders both output formats. Deterministic: the
// machine text is byte-identical across runs for an identical JobSpec.
Report run_job(const JobSpec& job);

} // namespace packets::cli
