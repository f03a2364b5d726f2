// Acceptance suite: runs every verification criterion at full scale and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "matchlab/numeric.hpp"
#include "matchlab/verify.hpp"

int main(int argc, char** argv) {
  using namespace matchlab::verify;

  std::string startup_error;
  if (!matchlab::constants::self_test(&startup_error)) {
    std::fprintf(stderr, "constant self-test failed: %s\n", startup_error.c_str());
    return 3;
  }

  VerifyOptions options;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--n-max") == 0) options.n_max = std::atoi(argv[i + 1]);
    if (std::strcmp(argv[i], "--trials") == 0) options.trials = std::strtoull(argv[i + 1], nullptr, 10);
    if (std::strcmp(argv[i], "--seed") == 0) options.seed = std::strtoull(argv[i + 1], nullptr, 10);
    if (std::strcmp(argv[i], "--threads") == 0) options.threads = std::atoi(argv[i + 1]);
  }

  struct Criterion {
    const char* label;
    CheckResult (*run)(const VerifyOptions&);
  };
  const Criterion criteria[] = {
      {"1", check_exact_sequences},
      {"2", check_triangle_vs_bruteforce},
      {"3", check_enumeration_vs_formula},
      {"4", check_rank_counts_vs_triangle},
      {"5", check_expectation_error_bound},
      {"6", check_balance_closed_form},
      {"7", check_averaging_process},
      {"8", check_ranking_mc_sandwich},
      {"9", check_pricing_identities},
      {"10", check_rank_insertion_bijection},
      {"11", check_adversary_halves},
  };

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const CheckResult result = criterion.run(options);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    all_pass = all_pass && result.passed();
    std::printf("[%s] criterion %s %s (%lld ms) — %s\n",
                result.status == "pass"   ? "PASS"
                : result.status == "skip" ? "SKIP"
                                          : "FAIL",
                criterion.label, result.name.c_str(), static_cast<long long>(elapsed),
                result.measured.c_str());
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES");
  return all_pass ? 0 : 1;
}
