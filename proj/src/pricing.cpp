#include "matchlab/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "matchlab/numeric.hpp"
#include "matchlab/parallel.hpp"
#include "matchlab/rng.hpp"

namespace matchlab {

namespace {

constexpr double kSumGuard = 1e-12;  // absorbs summation-order roundoff in inequalities

std::vector<double> prices_from_weights(std::span<const double> weights) {
  std::vector<double> prices(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0 || weights[i] > 1.0) {
      throw std::invalid_argument("priced ranking: weights must lie in [0, 1]");
    }
    prices[i] = std::exp(weights[i] - 1.0);
  }
  return prices;
}

void sample_weights(Rng& rng, std::vector<double>& weights) {
  for (auto& w : weights) w = rng.uniform01();
}

}  // namespace

std::vector<int> priced_matching_with_removed(const BipartiteGraph& g,
                                              std::span<const double> prices, int removed,
                                              std::vector<double>* utility) {
  const int n = g.n();
  std::vector<int> pairs(static_cast<std::size_t>(n), -1);
  if (utility) utility->assign(static_cast<std::size_t>(n), 0.0);
  std::vector<bool> exposed(static_cast<std::size_t>(n), true);
  if (removed >= 0) exposed[removed] = false;
  for (int j = 0; j < n; ++j) {
    int best = -1;
    double best_price = std::numeric_limits<double>::infinity();
    for (int v : g.neighbors(j)) {
      // ties have probability zero but floats collide: lower index wins
      if (exposed[v] && prices[v] < best_price) {
        best = v;
        best_price = prices[v];
      }
    }
    if (best >= 0) {
      exposed[best] = false;
      pairs[j] = best;
      if (utility) (*utility)[j] = 1.0 - best_price;
    }
  }
  return pairs;
}

PricedRun run_priced_ranking(const BipartiteGraph& g, std::span<const double> weights) {
  const int n = g.n();
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("priced ranking: need one weight per offline vertex");
  }
  PricedRun run;
  run.weights.assign(weights.begin(), weights.end());
  run.prices = prices_from_weights(weights);

  std::vector<int> by_price(static_cast<std::size_t>(n));
  std::iota(by_price.begin(), by_price.end(), 0);
  std::sort(by_price.begin(), by_price.end(), [&](int a, int b) {
    return run.prices[a] < run.prices[b] || (run.prices[a] == run.prices[b] && a < b);
  });
  run.price_order = Permutation::from_items(by_price);

  std::vector<int> pairs = priced_matching_with_removed(g, run.prices, -1, &run.utility);
  int matched = 0;
  run.revenue.assign(static_cast<std::size_t>(n), 0.0);
  double revenue = 0;
  for (int j = 0; j < n; ++j) {
    const int v = pairs[j];
    if (v >= 0) {
      ++matched;
      run.revenue[v] = run.prices[v];
      revenue += run.prices[v];
    }
  }
  run.matching = IntegralMatching{std::move(pairs), matched};
  run.total_revenue = revenue;
  // The complement form keeps revenue + utility == size exact in binary64.
  run.total_utility = static_cast<double>(matched) - revenue;
  return run;
}

PerEdgeReport per_edge_bound_mc(const BipartiteGraph& g, const IntegralMatching& matching,
                                std::uint64_t trials, std::uint64_t seed, int threads) {
  const int n = g.n();
  if (trials < 2) throw std::invalid_argument("per-edge estimate: need at least 2 trials");
  if (matching.size != n) {
    throw std::invalid_argument("per-edge estimate: matching must be perfect");
  }
  for (int j = 0; j < n; ++j) {
    if (!g.has_edge(j, matching.online_to_offline[j])) {
      throw std::invalid_argument("per-edge estimate: matching uses a non-edge");
    }
  }
  const std::vector<int> partner_of_offline = matching.offline_to_online();

  struct Block {
    std::vector<double> sum, sum_sq;
    double price_sum = 0, price_sum_sq = 0;
  };
  constexpr std::uint64_t kBlock = 2048;
  const std::size_t blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
  const auto partials = parallel_blocks<Block>(blocks, threads, [&](std::size_t b) {
    Block acc;
    acc.sum.assign(static_cast<std::size_t>(n), 0.0);
    acc.sum_sq.assign(static_cast<std::size_t>(n), 0.0);
    std::vector<double> weights(static_cast<std::size_t>(n));
    std::vector<double> utility;
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = Rng::for_trial(seed, t);
      sample_weights(rng, weights);
      std::vector<double> prices = prices_from_weights(weights);
      std::vector<int> pairs = priced_matching_with_removed(g, prices, -1, &utility);
      std::vector<bool> sold(static_cast<std::size_t>(n), false);
      for (int j = 0; j < n; ++j) {
        if (pairs[j] >= 0) sold[pairs[j]] = true;
      }
      for (int i = 0; i < n; ++i) {
        const double x = (sold[i] ? prices[i] : 0.0) + utility[partner_of_offline[i]];
        acc.sum[i] += x;
        acc.sum_sq[i] += x * x;
        acc.price_sum += prices[i];
        acc.price_sum_sq += prices[i] * prices[i];
      }
    }
    return acc;
  });

  PerEdgeReport report;
  report.trials = trials;
  report.seed = seed;
  const double t = static_cast<double>(trials);
  const double bound = constants::one_minus_inv_e_f64();
  double price_sum = 0, price_sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    double sum = 0, sum_sq = 0;
    for (const auto& blk : partials) {
      sum += blk.sum[i];
      sum_sq += blk.sum_sq[i];
    }
    PerEdgeEstimate est;
    est.offline = i;
    est.online = partner_of_offline[i];
    est.mean = sum / t;
    const double var = std::max(0.0, (sum_sq - sum * sum / t) / (t - 1.0));
    est.std_error = std::sqrt(var / t);
    est.flagged = est.mean + 4.0 * est.std_error < bound;
    report.sum_of_means += est.mean;
    report.edges.push_back(est);
  }
  for (const auto& blk : partials) {
    price_sum += blk.price_sum;
    price_sum_sq += blk.price_sum_sq;
  }
  const double samples = t * static_cast<double>(n);
  report.mean_price = price_sum / samples;
  const double pvar =
      std::max(0.0, (price_sum_sq - price_sum * price_sum / samples) / (samples - 1.0));
  report.price_std_error = std::sqrt(pvar / samples);
  return report;
}

SlacknessRecord slackness_realization(int n, std::span<const double> weights) {
  const BipartiteGraph g = make_monotone_graph(n);
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("slackness: need one weight per offline vertex");
  }
  const std::vector<double> prices = prices_from_weights(weights);
  std::vector<double> utility_full, utility_removed;
  priced_matching_with_removed(g, prices, -1, &utility_full);
  priced_matching_with_removed(g, prices, n - 1, &utility_removed);
  SlacknessRecord record;
  record.per_buyer.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    record.per_buyer[j] = utility_full[j] - utility_removed[j];
    record.sum += record.per_buyer[j];
  }
  record.bound = 1.0 - prices[n - 1];
  return record;
}

SlacknessMcReport slackness_mc(int n, std::uint64_t trials, std::uint64_t seed, int threads) {
  if (trials < 2) throw std::invalid_argument("slackness mc: need at least 2 trials");
  const BipartiteGraph g = make_monotone_graph(n);

  struct Block {
    std::uint64_t violations = 0;
    double max_excess = -std::numeric_limits<double>::infinity();
    double sum = 0, sum_sq = 0;
  };
  constexpr std::uint64_t kBlock = 4096;
  const std::size_t blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
  const auto partials = parallel_blocks<Block>(blocks, threads, [&](std::size_t b) {
    Block acc;
    std::vector<double> weights(static_cast<std::size_t>(n));
    std::vector<double> utility_full, utility_removed;
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = Rng::for_trial(seed, t);
      sample_weights(rng, weights);
      const std::vector<double> prices = prices_from_weights(weights);
      priced_matching_with_removed(g, prices, -1, &utility_full);
      priced_matching_with_removed(g, prices, n - 1, &utility_removed);
      double sum = 0;
      for (int j = 0; j < n; ++j) sum += utility_full[j] - utility_removed[j];
      const double excess = sum - (1.0 - prices[n - 1]);
      if (excess > kSumGuard) ++acc.violations;
      acc.max_excess = std::max(acc.max_excess, excess);
      acc.sum += sum;
      acc.sum_sq += sum * sum;
    }
    return acc;
  });

  SlacknessMcReport report;
  report.trials = trials;
  report.seed = seed;
  double sum = 0, sum_sq = 0;
  double max_excess = -std::numeric_limits<double>::infinity();
  for (const auto& blk : partials) {
    report.violations += blk.violations;
    max_excess = std::max(max_excess, blk.max_excess);
    sum += blk.sum;
    sum_sq += blk.sum_sq;
  }
  report.max_excess = max_excess;
  const double t = static_cast<double>(trials);
  report.mean_sum = sum / t;
  const double var = std::max(0.0, (sum_sq - sum * sum / t) / (t - 1.0));
  report.sum_std_error = std::sqrt(var / t);
  return report;
}

UtilityEqualityReport utility_equality_check(int n, int j, std::uint64_t trials,
                                                   std::uint64_t seed, int threads) {
  if (j < 1 || j > n) throw std::invalid_argument("utility equality: need 1 <= j <= n");
  if (trials < 2) throw std::invalid_argument("utility equality: need at least 2 trials");
  const BipartiteGraph g = make_monotone_graph(n);
  const int buyer = j - 1;

  struct Block {
    double sum_j = 0, sum_n = 0, diff_sum = 0, diff_sum_sq = 0;
  };
  constexpr std::uint64_t kBlock = 4096;
  const std::size_t blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
  const auto partials = parallel_blocks<Block>(blocks, threads, [&](std::size_t b) {
    Block acc;
    std::vector<double> weights(static_cast<std::size_t>(n));
    std::vector<double> utility_a, utility_b;
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = Rng::for_trial(seed, t);
      sample_weights(rng, weights);
      const std::vector<double> prices = prices_from_weights(weights);
      priced_matching_with_removed(g, prices, buyer, &utility_a);
      priced_matching_with_removed(g, prices, n - 1, &utility_b);
      const double ya = utility_a[buyer];
      const double yb = utility_b[buyer];
      acc.sum_j += ya;
      acc.sum_n += yb;
      const double d = ya - yb;
      acc.diff_sum += d;
      acc.diff_sum_sq += d * d;
    }
    return acc;
  });

  UtilityEqualityReport report;
  report.n = n;
  report.removed_j = j;
  report.trials = trials;
  report.seed = seed;
  double sum_j = 0, sum_n = 0, diff_sum = 0, diff_sum_sq = 0;
  for (const auto& blk : partials) {
    sum_j += blk.sum_j;
    sum_n += blk.sum_n;
    diff_sum += blk.diff_sum;
    diff_sum_sq += blk.diff_sum_sq;
  }
  const double t = static_cast<double>(trials);
  report.mean_removed_j = sum_j / t;
  report.mean_removed_last = sum_n / t;
  report.diff_mean = diff_sum / t;
  const double var = std::max(0.0, (diff_sum_sq - diff_sum * diff_sum / t) / (t - 1.0));
  report.diff_std_error = std::sqrt(var / t);
  return report;
}

}  // namespace matchlab
