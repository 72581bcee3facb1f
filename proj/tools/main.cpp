#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "packets/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"packets: local root numbers, distinguished characters and "
                 "branching verifiers for unitary-group parameters"};

    std::string input_file;
    std::string format;
    std::string bound;
    int threads = 0;
    std::vector<std::string> tokens;

    app.add_option("--input", input_file, "job document (line-oriented key=value)");
    app.add_option("--format", format, "output format: table or machine")
        ->check(CLI::IsMember({"table", "machine"}));
    app.add_option("--bound", bound, "sweep bound override (half-integer, e.g. 9/2)");
    app.add_option("--threads", threads, "worker threads for the sweeps");
    app.add_option("tokens", tokens, "inline job tokens, e.g. command=epsilon case=arch a=1/2");

    CLI11_PARSE(app, argc, argv);

    std::ostringstream job_text;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) {
            std::cerr << "cannot open input file: " << input_file << "\n";
            return 2;
        }
        job_text << in.rdbuf();
        job_text << "\n";
    }
    for (const std::string& t : tokens) job_text << t << "\n";
    if (!bound.empty()) job_text << "bound=" << bound << "\n";
    if (threads > 0) job_text << "threads=" << threads << "\n";

    try {
        packets::cli::JobSpec job = packets::cli::parse_job(job_text.str());
        if (format == "table") job.format = packets::cli::OutputFormat::Table;
        if (format == "machine") job.format = packets::cli::OutputFormat::Machine;

        packets::cli::Report report = packets::cli::run_job(job);
        std::cout << (job.format == packets::cli::OutputFormat::Machine ? report.machine_text
                                                                        : report.table_text);
        return report.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
