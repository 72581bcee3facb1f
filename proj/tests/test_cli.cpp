#include <doctest.h>

#include "packets/errors.hpp"
#include "packets/job.hpp"

using namespace packets;
using namespace packets::cli;

TEST_CASE("job parsing") {
    JobSpec job = parse_job("command=epsilon case=arch a=1/2");
    CHECK(job.command == Command::Epsilon);
    CHECK(job.params.at("case") == "arch");
    CHECK(job.params.at("a") == "1/2");
    CHECK(job.format == OutputFormat::Table);

    JobSpec branch = parse_job("command=compact-branch n=2 lambda=-1/2,1/2 mu=-1,0,1\n"
                               "format=machine\n");
    CHECK(branch.command == Command::CompactBranch);
    CHECK(branch.format == OutputFormat::Machine);
    CHECK(branch.params.at("mu") == "-1,0,1");

    // comments and blank lines
    JobSpec commented = parse_job("# exhaustive run\ncommand=verify-all\n\nthreads=2\n");
    CHECK(commented.command == Command::VerifyAll);
    CHECK(commented.params.at("threads") == "2");
}

TEST_CASE("strict parsing rejects bad input with positions") {
    CHECK_THROWS_AS(parse_job("command=nonsense"), ParameterError);
    CHECK_THROWS_AS(parse_job("case=arch a=1/2"), ParameterError); // missing command
    CHECK_THROWS_AS(parse_job("command=epsilon case=arch a=1/2 wat=1"), ParameterError);
    CHECK_THROWS_AS(parse_job("command=epsilon case=arch case=tame"), ParameterError);
    CHECK_THROWS_AS(parse_job("command=epsilon notakeyvalue"), ParameterError);

    try {
        parse_job("command=epsilon\nbogus=1");
        CHECK(false);
    } catch (const ParameterError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("bogus") != std::string::npos);
    }
}

TEST_CASE("decimal half-integers are rejected at run time") {
    JobSpec job = parse_job("command=epsilon case=arch a=0.5");
    Report r = run_job(job);
    CHECK(r.exit_code == 2);
    CHECK(r.machine_text.find("decimal notation rejected") != std::string::npos);
}

TEST_CASE("epsilon jobs") {
    Report arch = run_job(parse_job("command=epsilon case=arch a=-3/2"));
    CHECK(arch.exit_code == 0);
    CHECK(arch.machine_text.find("result.1.value=-1") != std::string::npos);
    CHECK(arch.machine_text.find("result.1.rule=arch-sign-rule") != std::string::npos);

    Report tame = run_job(parse_job("command=epsilon case=tame q=3 c=0"));
    CHECK(tame.exit_code == 0);
    CHECK(tame.machine_text.find("result.1.value=-1") != std::string::npos);
    CHECK(tame.machine_text.find("result.1.conductor=0") != std::string::npos);

    Report twist = run_job(parse_job("command=epsilon case=twist f=1 n=-1"));
    CHECK(twist.machine_text.find("result.1.value=+1") != std::string::npos);
}

TEST_CASE("distinguished character job") {
    // two matched pairs at q=3: alpha exponents {0, 2}, beta {0, 6}
    Report r = run_job(parse_job("command=dist-char case=tame q=3 m=0,2 n=0,6"));
    CHECK(r.exit_code == 0);
    CHECK(r.machine_text.find("sign=-1") != std::string::npos);
    CHECK(r.machine_text.find(".p=2") != std::string::npos);
    CHECK(r.machine_text.find("central=(-1,1)") != std::string::npos);

    Report arch = run_job(parse_job("command=dist-char case=arch m=1/2,-3/2 n=1,-1"));
    CHECK(arch.exit_code == 0);
    CHECK(arch.machine_text.find("generator=e1") != std::string::npos);

    // invalid pair: exit 2 with the violation list
    Report bad = run_job(parse_job("command=dist-char case=arch m=1 n=0"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.machine_text.find("result.status=fail") != std::string::npos);
}

TEST_CASE("gl-branch job with oracle confirmation") {
    Report formula_only = run_job(parse_job("command=gl-branch pi=a,b mu=a"));
    CHECK(formula_only.exit_code == 0);
    CHECK(formula_only.machine_text.find("multiplicity=2") != std::string::npos);

    Report with_oracle = run_job(parse_job("command=gl-branch pi=0,1 mu=0 q=3"));
    CHECK(with_oracle.exit_code == 0);
    CHECK(with_oracle.machine_text.find("multiplicity=2") != std::string::npos);
    CHECK(with_oracle.machine_text.find("oracle=2") != std::string::npos);
    CHECK(with_oracle.machine_text.find("match=yes") != std::string::npos);
}

TEST_CASE("compact-branch and unitary jobs") {
    Report cb = run_job(parse_job("command=compact-branch n=2 lambda=-1/2,1/2 mu=-1,0,1"));
    CHECK(cb.exit_code == 0);
    CHECK(cb.machine_text.find("interlaces=yes") != std::string::npos);
    CHECK(cb.machine_text.find("total=-1") != std::string::npos);

    Report packet = run_job(parse_job("command=unitary-depth0 dim=2"));
    CHECK(packet.exit_code == 0);
    CHECK(packet.machine_text.find("result.4.") != std::string::npos); // 4 embeddings

    Report dist = run_job(parse_job("command=unitary-depth0 q=3 m=0,2 n=0"));
    CHECK(dist.exit_code == 0);
    CHECK(dist.machine_text.find("quotient=U1xU1") != std::string::npos);
    CHECK(dist.machine_text.find("consistency=pass") != std::string::npos);
}

TEST_CASE("real-packet job") {
    Report r = run_job(parse_job("command=real-packet m=1/2,-3/2 n=1,-1"));
    CHECK(r.exit_code == 0);
    CHECK(r.machine_text.find("sorted=1/2,-3/2") != std::string::npos);
    CHECK(r.machine_text.find("signature=") != std::string::npos);
    CHECK(r.machine_text.find("compact-walls=") != std::string::npos);
}

TEST_CASE("machine output round-trips and is deterministic") {
    JobSpec job = parse_job("command=dist-char case=tame q=3 m=0,2 n=0,6 format=machine");
    Report r1 = run_job(job);
    Report r2 = run_job(job);
    CHECK(r1.machine_text == r2.machine_text);

    JobSpec reparsed = parse_job(r1.machine_text);
    CHECK(reparsed.command == job.command);
    CHECK(reparsed.params == job.params);
    CHECK(reparsed.format == job.format);

    Report r3 = run_job(reparsed);
    CHECK(r3.machine_text == r1.machine_text);
}
