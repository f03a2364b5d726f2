#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchlab/sequences.hpp"

namespace matchlab::verify {

struct VerifyOptions {
  int n_max = 0;  // 0 = full scale; smaller values clamp or skip checks
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
};

struct CheckResult {
  std::string name;
  std::string claim;      // the identity or bound the check validates
  std::string status;     // "pass" | "fail" | "skip"
  std::string measured;
  std::string expected;
  std::string tolerance;

  bool passed() const { return status != "fail"; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

// Runs the full battery (11 named checks, one per acceptance criterion).
VerifyReport run_verify(const VerifyOptions& options);

// Individual checks, exposed so tests can drive them directly.
CheckResult check_exact_sequences(const VerifyOptions& options);
CheckResult check_triangle_vs_bruteforce(const VerifyOptions& options);
// Variant taking the table to validate; lets tests inject a corrupted fixture.
CheckResult check_triangle_vs_bruteforce(const CountTriangle& triangle, int n_cap);
CheckResult check_enumeration_vs_formula(const VerifyOptions& options);
CheckResult check_rank_counts_vs_triangle(const VerifyOptions& options);
CheckResult check_expectation_error_bound(const VerifyOptions& options);
CheckResult check_balance_closed_form(const VerifyOptions& options);
CheckResult check_averaging_process(const VerifyOptions& options);
CheckResult check_ranking_mc_sandwich(const VerifyOptions& options);
CheckResult check_pricing_identities(const VerifyOptions& options);
CheckResult check_rank_insertion_bijection(const VerifyOptions& options);
CheckResult check_adversary_halves(const VerifyOptions& options);

}  // namespace matchlab::verify
