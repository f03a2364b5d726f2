#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matchlab/graph.hpp"

namespace matchlab {

// Economic view of rank-greedy matching: each offline vertex draws a weight
// w in [0,1] and is priced at e^(w-1); buyers purchase their cheapest exposed
// desired item. Prices are binary64 throughout; this analysis is continuous.
struct PricedRun {
  std::vector<double> weights;     // per offline vertex
  std::vector<double> prices;      // e^(w-1), in [1/e, 1]
  Permutation price_order;         // ranks by ascending price, ties to lower index
  IntegralMatching matching;
  std::vector<double> revenue;     // per offline vertex; 0 if unsold
  std::vector<double> utility;     // per online vertex; 1 - price paid, 0 if unmatched
  double total_revenue = 0;
  double total_utility = 0;        // matching size minus total revenue, exactly
};

PricedRun run_priced_ranking(const BipartiteGraph& g, std::span<const double> weights);

// Greedy purchase pass with one offline vertex removed (-1: none); fills
// utilities per buyer. Used by the coupled thought experiments below.
std::vector<int> priced_matching_with_removed(const BipartiteGraph& g,
                                              std::span<const double> prices, int removed,
                                              std::vector<double>* utility = nullptr);

struct PerEdgeEstimate {
  int offline = -1;
  int online = -1;  // partner under the fixed perfect matching
  double mean = 0;
  double std_error = 0;
  bool flagged = false;  // mean + 4*stderr fell below 1 - 1/e
};

struct PerEdgeReport {
  std::vector<PerEdgeEstimate> edges;
  double sum_of_means = 0;
  double mean_price = 0;       // across all sampled weights
  double price_std_error = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimates of E[r(v_i) + y(M(v_i))] per edge of the perfect
// matching M, which the bound 1 - 1/e holds for edge by edge.
PerEdgeReport per_edge_bound_mc(const BipartiteGraph& g, const IntegralMatching& matching,
                                std::uint64_t trials, std::uint64_t seed, int threads = 0);

// One realization of the slack accounting on the size-n monotone graph:
// per-buyer utility drop when the last offline vertex is removed, its sum,
// and the per-realization bound 1 - p_n.
struct SlacknessRecord {
  std::vector<double> per_buyer;  // y(u) - y_without_last(u)
  double sum = 0;
  double bound = 0;  // 1 - price of the last offline vertex
};

SlacknessRecord slackness_realization(int n, std::span<const double> weights);

struct SlacknessMcReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;   // realizations with sum > bound (+ float guard)
  double max_excess = 0;          // max over realizations of sum - bound
  double mean_sum = 0;
  double sum_std_error = 0;
};

SlacknessMcReport slackness_mc(int n, std::uint64_t trials, std::uint64_t seed, int threads = 0);

struct UtilityEqualityReport {
  int n = 0;
  int removed_j = 0;  // 1-based in reports; stored 0-based internally
  double mean_removed_j = 0;
  double mean_removed_last = 0;
  double diff_mean = 0;        // paired difference, common random weights
  double diff_std_error = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Estimates buyer j's expected utility with offline vertex j removed versus
// with the last offline vertex removed, using common random weights.
UtilityEqualityReport utility_equality_check(int n, int j, std::uint64_t trials,
                                                   std::uint64_t seed, int threads = 0);

}  // namespace matchlab
