#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

// Enumeration over all n! rankings is capped here; 10! replays run in seconds,
// one more factor of n does not.
inline constexpr int kEnumerationCap = 10;

// One deterministic execution of rank-greedy matching: arrival j takes its
// exposed neighbor of smallest rank, if any. `graph` is a non-owning pointer;
// the caller keeps the graph alive for the lifetime of the run.
struct RankingRun {
  const BipartiteGraph* graph = nullptr;
  Permutation pi;
  IntegralMatching matching;
  std::vector<bool> matched_ranks;  // matched_ranks[r]: item of rank r got matched
};

RankingRun run_ranking(const BipartiteGraph& g, const Permutation& pi);

// Replays the run and confirms the greedy certificate: every unmatched
// arrival had no exposed neighbor at its step.
bool greedy_certificate_ok(const BipartiteGraph& g, const RankingRun& run);

struct EnumerationResult {
  BigInt sum_of_sizes;
  BigRat expectation;  // sum / n!
};

// Sums matching sizes over all n! rankings of the size-n monotone graph.
// Work splits by the first-ranked vertex; partial sums merge in fixed order.
EnumerationResult enumerate_ranking_exact(int n, int threads = 0);

// counts[i-1] = number of rankings under which the item of rank i is matched
// on the size-n monotone graph; brute-force oracle for the d-triangle.
std::vector<BigInt> matched_at_rank_counts(int n, int threads = 0);

struct EstimateReport {
  int n = 0;
  std::uint64_t trials = 0;
  double mean = 0;
  double std_error = 0;
  double lower_bound_theory = 0;                 // (1 - 1/e) n
  std::optional<double> upper_bound_theory;      // (1 - 1/e) n + 1/e, monotone graphs only
  std::uint64_t seed = 0;
};

// Samples one ranking per trial from Rng::for_trial(seed, t). Bound fields are
// advisory metadata; assertions belong to the verification suite.
EstimateReport ranking_monte_carlo(const BipartiteGraph& g, std::uint64_t trials,
                                   std::uint64_t seed, int threads = 0);

}  // namespace matchlab
