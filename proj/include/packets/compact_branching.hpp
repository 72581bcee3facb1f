#pragma once

#include <string>
#include <vector>

#include "packets/half_int.hpp"
#include "packets/sign.hpp"

namespace packets::compact {

// Highest-weight-style data for the compact pair U(n) inside U(n+1):
// lambda is the strictly increasing n-tuple for U(n), mu the strictly
// increasing (n+1)-tuple for U(n+1). Parity rule: the lambda_i are strict
// half-integers when n is even and integers when n is odd; the mu_i are in
// the opposite class. In particular mu_k - lambda_i is always a strict
// half-integer and never zero.
struct CompactParams {
    int n = 0;
    std::vector<HalfInt> lambda; // size n
    std::vector<HalfInt> mu;     // size n+1
};

std::vector<std::string> validate(const CompactParams& p);
void require_valid(const CompactParams& p);

// The branching criterion: true iff
// mu_1 < lambda_1 < mu_2 < lambda_2 < ... < lambda_n < mu_{n+1}.
bool interlaces(const CompactParams& p);

// Root number of the one-dimensional character with strict half-integer
// exponent; same sign rule as the archimedean engine, restated here for
// the compact-pair bookkeeping.
Sign character_epsilon(HalfInt exponent);

// epsilon(chi_{mu_k} (x) sigma_0) = prod_i sign(mu_k - lambda_i); k is
// 1-based, 1 <= k <= n+1. When the parameter interlaces, this equals
// (-1)^{n-k+1}.
Sign per_k_epsilon(const CompactParams& p, int k);

// Product of the per-k signs; equals (-1)^{n(n+1)/2} on interlacing
// parameters.
Sign total_epsilon(const CompactParams& p);

// +1 for n = 0, 3 mod 4, -1 for n = 1, 2 mod 4: the sign attached to the
// quasi-split pair at rank n.
Sign quasi_split_sign_table(int n);

struct CrossValidateReport {
    long instances = 0;
    long interlacing_instances = 0;
    long counterexamples = 0;
    std::vector<std::string> details; // one line per counterexample
};

// Exhaustively enumerates all valid CompactParams with 1 <= n <= max_n and
// every entry bounded by |entry| <= bound, and checks both directions:
//   interlaces  ==>  per-k pattern (-1)^{n-k+1} for all k, and
//                    total sign = (-1)^{n(n+1)/2} = quasi-split table value;
//   full per-k pattern  ==>  interlaces.
// The instance checks are pure; with threads > 1 the enumeration space is
// partitioned across workers and merged in a fixed chunk order, so the
// report is deterministic.
CrossValidateReport cross_validate(int max_n, HalfInt bound, int threads = 1);

} // namespace packets::compact
