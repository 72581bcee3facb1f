// Acceptance suite: runs every verification sweep at its pinned bounds and
// tolerances and prints one pass/fail line per criterion. Exit code 0 only
// when every criterion passes (including the runtime limits).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "packets/verify.hpp"

namespace {

struct Criterion {
    std::string label;
    double time_limit_seconds; // <= 0: no limit
    std::function<packets::verify::SweepResult()> run;
};

} // namespace

int main() {
    using packets::verify::SweepResult;
    using packets::HalfInt;

    std::vector<Criterion> criteria = {
        {"criterion 1: epsilon closed forms (|a| <= 19/2, both conductors)", 1.0,
         [] { return packets::verify::epsilon_closed_forms(HalfInt::from_twice(19)); }},
        {"criterion 2: distinguished-character path equality (|M|,|N| <= 4)", 10.0,
         [] { return packets::verify::chi_path_equality(4, 4, HalfInt::from_twice(7), {3, 5}); }},
        {"criterion 3: tame central identity prod chi = (-1)^p", 0.0,
         [] { return packets::verify::tame_central_identity(4, 4, {3, 5}); }},
        {"criterion 4: interlacing <=> epsilon pattern (n <= 4, entries <= 9/2)", 5.0,
         [] { return packets::verify::interlacing_epsilon(4, HalfInt::from_twice(9), 1); }},
        {"criterion 5: branching formula vs character oracle (q in {2,3,5})", 120.0,
         [] { return packets::verify::gl_formula_vs_oracle({2, 3, 5}, 4, 25000); }},
        {"criterion 6: restriction character identity (n <= 3, q in {2,3})", 0.0,
         [] { return packets::verify::gl_restriction_identity({2, 3}, 3); }},
        {"criterion 7: depth-zero bookkeeping (1000 random tame pairs)", 0.0,
         [] { return packets::verify::depth_zero_bookkeeping(1000, {3, 5}, 5, 12345u); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        SweepResult result;
        bool threw = false;
        std::string what;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            threw = true;
            what = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool pass = !threw && result.failures == 0 &&
                    (c.time_limit_seconds <= 0 || seconds <= c.time_limit_seconds);
        if (!pass) ++failures;

        std::printf("%s  %s  [instances=%ld failures=%ld time=%.2fs%s]\n",
                    pass ? "PASS" : "FAIL", c.label.c_str(), result.instances, result.failures,
                    seconds,
                    (c.time_limit_seconds > 0 && seconds > c.time_limit_seconds)
                        ? " over time limit"
                        : "");
        if (threw) std::printf("      error: %s\n", what.c_str());
        for (const std::string& note : result.notes)
            std::printf("      counterexample: %s\n", note.c_str());
    }

    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
