#include "matchlab/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "matchlab/parallel.hpp"
#include "matchlab/rng.hpp"

namespace matchlab {

namespace {

// Reusable greedy executor; claim stamps avoid clearing state between runs.
class Replayer {
 public:
  explicit Replayer(const BipartiteGraph& g)
      : g_(g), claimed_(static_cast<std::size_t>(g.n()), 0) {}

  // ranks[v] = rank of offline vertex v. Returns the matching size; if
  // `pairs` is non-null it receives online->offline (-1 for unmatched).
  int run(const std::vector<int>& ranks, std::vector<int>* pairs = nullptr) {
    ++epoch_;
    const int n = g_.n();
    if (pairs) pairs->assign(static_cast<std::size_t>(n), -1);
    int size = 0;
    for (int j = 0; j < n; ++j) {
      int best = -1;
      int best_rank = std::numeric_limits<int>::max();
      for (int v : g_.neighbors(j)) {
        if (claimed_[v] != epoch_ && ranks[v] < best_rank) {
          best = v;
          best_rank = ranks[v];
        }
      }
      if (best >= 0) {
        claimed_[best] = epoch_;
        ++size;
        if (pairs) (*pairs)[j] = best;
      }
    }
    return size;
  }

 private:
  const BipartiteGraph& g_;
  std::vector<std::uint32_t> claimed_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

RankingRun run_ranking(const BipartiteGraph& g, const Permutation& pi) {
  if (pi.n() != g.n()) throw std::invalid_argument("ranking: permutation length != graph size");
  Replayer replayer(g);
  std::vector<int> pairs;
  const int size = replayer.run(pi.ranks(), &pairs);
  std::vector<bool> matched_ranks(static_cast<std::size_t>(g.n()), false);
  for (int j = 0; j < g.n(); ++j) {
    if (pairs[j] >= 0) matched_ranks[pi.rank_of(pairs[j])] = true;
  }
  RankingRun run;
  run.graph = &g;
  run.pi = pi;
  run.matching = IntegralMatching{std::move(pairs), size};
  run.matched_ranks = std::move(matched_ranks);
  return run;
}

bool greedy_certificate_ok(const BipartiteGraph& g, const RankingRun& run) {
  const int n = g.n();
  std::vector<bool> exposed(static_cast<std::size_t>(n), true);
  int seen = 0;
  for (int j = 0; j < n; ++j) {
    const int chosen = run.matching.online_to_offline[j];
    if (chosen < 0) {
      for (int v : g.neighbors(j)) {
        if (exposed[v]) return false;  // skipped despite an exposed neighbor
      }
      continue;
    }
    if (!g.has_edge(j, chosen) || !exposed[chosen]) return false;
    // chosen must be the exposed neighbor of minimum rank
    for (int v : g.neighbors(j)) {
      if (exposed[v] && run.pi.rank_of(v) < run.pi.rank_of(chosen)) return false;
    }
    exposed[chosen] = false;
    ++seen;
  }
  return seen == run.matching.size;
}

namespace {

void check_enumeration_cap(int n) {
  if (n < 1) throw std::invalid_argument("enumeration: n must be positive");
  if (n > kEnumerationCap) {
    throw std::invalid_argument(
        "enumeration over n! rankings is capped at n <= 10; use the Monte Carlo estimator for "
        "larger n");
  }
}

// Iterates every permutation with items[0] == first, lexicographically over
// the tail, invoking visit(ranks).
template <class Visit>
void for_each_permutation_with_first(int n, int first, Visit&& visit) {
  std::vector<int> items;
  items.reserve(static_cast<std::size_t>(n));
  items.push_back(first);
  for (int v = 0; v < n; ++v) {
    if (v != first) items.push_back(v);
  }
  std::vector<int> ranks(static_cast<std::size_t>(n));
  do {
    for (int r = 0; r < n; ++r) ranks[items[r]] = r;
    visit(ranks, items);
  } while (std::next_permutation(items.begin() + 1, items.end()));
}

}  // namespace

EnumerationResult enumerate_ranking_exact(int n, int threads) {
  check_enumeration_cap(n);
  const BipartiteGraph g = make_monotone_graph(n);
  const auto partials = parallel_blocks<std::uint64_t>(
      static_cast<std::size_t>(n), threads, [&](std::size_t first) {
        Replayer replayer(g);
        std::uint64_t sum = 0;
        for_each_permutation_with_first(
            n, static_cast<int>(first),
            [&](const std::vector<int>& ranks, const std::vector<int>&) {
              sum += static_cast<std::uint64_t>(replayer.run(ranks));
            });
        return sum;
      });
  BigInt sum = 0;
  for (const auto p : partials) sum += p;
  EnumerationResult result;
  result.sum_of_sizes = sum;
  result.expectation = BigRat(sum, factorial(static_cast<unsigned>(n)));
  return result;
}

std::vector<BigInt> matched_at_rank_counts(int n, int threads) {
  check_enumeration_cap(n);
  const BipartiteGraph g = make_monotone_graph(n);
  using Counts = std::vector<std::uint64_t>;
  const auto partials = parallel_blocks<Counts>(
      static_cast<std::size_t>(n), threads, [&](std::size_t first) {
        Replayer replayer(g);
        Counts counts(static_cast<std::size_t>(n), 0);
        std::vector<int> pairs;
        for_each_permutation_with_first(
            n, static_cast<int>(first),
            [&](const std::vector<int>& ranks, const std::vector<int>&) {
              replayer.run(ranks, &pairs);
              for (int j = 0; j < n; ++j) {
                if (pairs[j] >= 0) ++counts[ranks[pairs[j]]];
              }
            });
        return counts;
      });
  std::vector<BigInt> counts(static_cast<std::size_t>(n), BigInt(0));
  for (const auto& partial : partials) {
    for (int r = 0; r < n; ++r) counts[r] += partial[r];
  }
  return counts;
}

EstimateReport ranking_monte_carlo(const BipartiteGraph& g, std::uint64_t trials,
                                   std::uint64_t seed, int threads) {
  if (trials < 2) throw std::invalid_argument("monte carlo: need at least 2 trials");
  const int n = g.n();

  struct Moments {
    double sum = 0;
    double sum_sq = 0;
  };
  constexpr std::uint64_t kBlock = 4096;  // fixed block size keeps reductions thread-invariant
  const std::size_t blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
  const auto partials = parallel_blocks<Moments>(blocks, threads, [&](std::size_t b) {
    Replayer replayer(g);
    std::vector<int> items(static_cast<std::size_t>(n));
    std::vector<int> ranks(static_cast<std::size_t>(n));
    Moments m;
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = Rng::for_trial(seed, t);
      std::iota(items.begin(), items.end(), 0);
      rng.shuffle(items);
      for (int r = 0; r < n; ++r) ranks[items[r]] = r;
      const double x = static_cast<double>(replayer.run(ranks));
      m.sum += x;
      m.sum_sq += x * x;
    }
    return m;
  });
  double sum = 0, sum_sq = 0;
  for (const auto& m : partials) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const double t = static_cast<double>(trials);
  const double variance = std::max(0.0, (sum_sq - sum * sum / t) / (t - 1.0));

  EstimateReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.mean = sum / t;
  report.std_error = std::sqrt(variance / t);
  report.lower_bound_theory = constants::one_minus_inv_e_f64() * n;
  if (is_monotone_graph(g)) {
    report.upper_bound_theory = constants::one_minus_inv_e_f64() * n + constants::inv_e_f64();
  }
  return report;
}

}  // namespace matchlab
