#include "packets/compact_branching.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "packets/epsilon.hpp"
#include "packets/errors.hpp"

namespace packets::compact {

std::vector<std::string> validate(const CompactParams& p) {
    std::vector<std::string> violations;
    if (p.n < 1) violations.push_back("n must be positive");
    if (static_cast<int>(p.lambda.size()) != p.n)
        violations.push_back("lambda must have n entries");
    if (static_cast<int>(p.mu.size()) != p.n + 1)
        violations.push_back("mu must have n+1 entries");
    if (!violations.empty()) return violations;

    const bool lambda_strict_half = (p.n % 2 == 0);
    for (HalfInt v : p.lambda) {
        if (v.is_strict_half() != lambda_strict_half) {
            violations.push_back("lambda parity violation: entries must be " +
                                 std::string(lambda_strict_half ? "strict half-integers"
                                                                : "integers") +
                                 " for n=" + std::to_string(p.n));
            break;
        }
    }
    for (HalfInt v : p.mu) {
        if (v.is_strict_half() == lambda_strict_half) {
            violations.push_back("mu parity violation: entries must be in the class opposite "
                                 "to lambda for n=" + std::to_string(p.n));
            break;
        }
    }
    for (std::size_t i = 1; i < p.lambda.size(); ++i)
        if (!(p.lambda[i - 1] < p.lambda[i])) {
            violations.push_back("lambda must be strictly increasing");
            break;
        }
    for (std::size_t i = 1; i < p.mu.size(); ++i)
        if (!(p.mu[i - 1] < p.mu[i])) {
            violations.push_back("mu must be strictly increasing");
            break;
        }
    return violations;
}

void require_valid(const CompactParams& p) {
    std::vector<std::string> violations = validate(p);
    if (violations.empty()) return;
    std::string msg = "invalid compact branching parameter:";
    for (const std::string& v : violations) msg += "\n  - " + v;
    throw ValidationError(msg);
}

bool interlaces(const CompactParams& p) {
    require_valid(p);
    for (int i = 0; i < p.n; ++i) {
        if (!(p.mu[i] < p.lambda[i])) return false;
        if (!(p.lambda[i] < p.mu[i + 1])) return false;
    }
    return true;
}

Sign character_epsilon(HalfInt exponent) {
    if (!exponent.is_strict_half())
        throw PreconditionError("character_epsilon: exponent " + exponent.to_string() +
                                " must be a strict half-integer");
    return epsilon::arch_epsilon(exponent);
}

Sign per_k_epsilon(const CompactParams& p, int k) {
    require_valid(p);
    if (k < 1 || k > p.n + 1)
        throw ParameterError("per_k_epsilon: k must be in 1..n+1, got " + std::to_string(k));
    Sign prod = Sign::plus();
    for (int i = 0; i < p.n; ++i) {
        HalfInt diff = p.mu[k - 1] - p.lambda[i];
        if (diff.is_zero())
            throw PreconditionError("degenerate parameter: mu_k equals a lambda entry");
        prod *= character_epsilon(diff);
    }
    return prod;
}

Sign total_epsilon(const CompactParams& p) {
    require_valid(p);
    Sign prod = Sign::plus();
    for (int k = 1; k <= p.n + 1; ++k) prod *= per_k_epsilon(p, k);
    return prod;
}

Sign quasi_split_sign_table(int n) {
    int r = ((n % 4) + 4) % 4;
    return (r == 0 || r == 3) ? Sign::plus() : Sign::minus();
}

namespace {

// All strictly increasing k-tuples from pool (pool is sorted ascending).
void combinations(const std::vector<HalfInt>& pool, int k,
                  const std::function<void(const std::vector<HalfInt>&)>& emit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > static_cast<int>(pool.size())) return;
    std::vector<HalfInt> current(k);
    while (true) {
        for (int i = 0; i < k; ++i) current[i] = pool[idx[i]];
        emit(current);
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<HalfInt> bounded_values(bool strict_half, HalfInt bound) {
    std::vector<HalfInt> vals;
    std::int64_t twice_bound = bound.twice_value();
    std::int64_t start = strict_half ? 1 : 2;
    for (std::int64_t t = start; t <= twice_bound; t += 2) {
        vals.push_back(HalfInt::from_twice(-t));
        vals.push_back(HalfInt::from_twice(t));
    }
    if (!strict_half) vals.push_back(HalfInt::whole(0));
    std::sort(vals.begin(), vals.end());
    return vals;
}

struct InstanceCheck {
    bool failed = false;
    std::string detail;
    bool interlacing = false;
};

InstanceCheck check_instance(const CompactParams& p) {
    InstanceCheck r;
    bool pattern_holds = true;
    for (int k = 1; k <= p.n + 1; ++k) {
        if (per_k_epsilon(p, k) != Sign::of_parity(p.n - k + 1)) {
            pattern_holds = false;
            break;
        }
    }
    r.interlacing = interlaces(p);
    if (r.interlacing) {
        bool total_ok = total_epsilon(p) == Sign::of_parity(static_cast<std::int64_t>(p.n) *
                                                            (p.n + 1) / 2) &&
                        total_epsilon(p) == quasi_split_sign_table(p.n);
        if (!pattern_holds || !total_ok) {
            r.failed = true;
            r.detail = "interlacing instance violates the epsilon pattern";
        }
    } else if (pattern_holds) {
        r.failed = true;
        r.detail = "full per-k pattern without interlacing";
    }
    if (r.failed) {
        r.detail += ": n=" + std::to_string(p.n) + " lambda=(";
        for (std::size_t i = 0; i < p.lambda.size(); ++i)
            r.detail += (i ? "," : "") + p.lambda[i].to_string();
        r.detail += ") mu=(";
        for (std::size_t i = 0; i < p.mu.size(); ++i)
            r.detail += (i ? "," : "") + p.mu[i].to_string();
        r.detail += ")";
    }
    return r;
}

} // namespace

CrossValidateReport cross_validate(int max_n, HalfInt bound, int threads) {
    CrossValidateReport report;
    if (threads < 1) threads = 1;

    for (int n = 1; n <= max_n; ++n) {
        const bool lambda_strict_half = (n % 2 == 0);
        std::vector<HalfInt> lambda_pool = bounded_values(lambda_strict_half, bound);
        std::vector<HalfInt> mu_pool = bounded_values(!lambda_strict_half, bound);

        std::vector<std::vector<HalfInt>> lambdas;
        combinations(lambda_pool, n, [&](const std::vector<HalfInt>& c) { lambdas.push_back(c); });

        struct ChunkResult {
            long instances = 0;
            long interlacing = 0;
            long failures = 0;
            std::vector<std::string> details;
        };
        std::vector<ChunkResult> chunks(threads);

        auto work = [&](int chunk) {
            ChunkResult& res = chunks[chunk];
            for (std::size_t li = chunk; li < lambdas.size(); li += threads) {
                CompactParams p;
                p.n = n;
                p.lambda = lambdas[li];
                combinations(mu_pool, n + 1, [&](const std::vector<HalfInt>& muc) {
                    p.mu = muc;
                    InstanceCheck c = check_instance(p);
                    ++res.instances;
                    if (c.interlacing) ++res.interlacing;
                    if (c.failed) {
                        ++res.failures;
                        res.details.push_back(c.detail);
                    }
                });
            }
        };

        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (std::thread& t : pool) t.join();
        }
        for (const ChunkResult& res : chunks) {
            report.instances += res.instances;
            report.interlacing_instances += res.interlacing;
            report.counterexamples += res.failures;
            report.details.insert(report.details.end(), res.details.begin(), res.details.end());
        }
    }
    return report;
}

} // namespace packets::compact
