#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matchlab/fractional.hpp"
#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

// One water-filling arrival: the budget min(1, sum of free neighbor capacity)
// is spent raising the lowest-loaded neighbors to a common threshold.
template <class Num>
struct WaterFillStep {
  int online = -1;
  Num budget{0};
  std::optional<Num> threshold;                // empty when nothing was raised
  std::vector<std::pair<int, Num>> raised;     // (offline vertex, added weight)
};

template <class Num>
struct BalanceResult {
  FractionalMatching<Num> matching;
  std::vector<WaterFillStep<Num>> steps;

  Num size() const { return matching.size(); }
};

// Processes arrivals in order, keeping neighbor loads as balanced as possible.
// Saturated or empty neighborhoods yield an empty step (budget clamps to 0).
template <class Num>
BalanceResult<Num> run_balance(const BipartiteGraph& g) {
  const int n = g.n();
  BalanceResult<Num> result{FractionalMatching<Num>(n), {}};
  result.steps.reserve(static_cast<std::size_t>(n));
  auto& loads = result.matching.loads_offline;
  const Num one(1);

  std::vector<int> order;
  for (int j = 0; j < n; ++j) {
    WaterFillStep<Num> step;
    step.online = j;
    const auto& nbrs = g.neighbors(j);

    Num free(0);
    for (int v : nbrs) free += one - loads[v];
    step.budget = std::min(one, free);
    if (step.budget <= Num(0)) {
      step.budget = Num(0);
      result.steps.push_back(std::move(step));
      continue;
    }

    order.assign(nbrs.begin(), nbrs.end());
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return loads[a] < loads[b] || (loads[a] == loads[b] && a < b); });

    // Find the unique threshold t with sum over {loads < t} of (t - load) = budget:
    // sweep prefixes of the sorted loads until t fits below the next load.
    Num prefix(0);
    Num t(0);
    std::size_t k = 0;
    for (k = 1; k <= order.size(); ++k) {
      prefix += loads[order[k - 1]];
      t = (step.budget + prefix) / Num(static_cast<int>(k));
      if (k == order.size() || t <= loads[order[k]]) break;
    }
    step.threshold = t;
    for (std::size_t idx = 0; idx < k; ++idx) {
      const int v = order[idx];
      if (loads[v] < t) {
        step.raised.emplace_back(v, t - loads[v]);
        result.matching.add_weight(j, v, t - loads[v]);
      }
    }
    result.steps.push_back(std::move(step));
  }
  return result;
}

struct MonotoneClosedForm {
  int k = 0;       // last arrival that still spends its full unit budget
  BigRat size;     // k + (n - k)(1 - (H_n - H_{n-k}))
};

// Exact-rational evaluation of the monotone-graph water-filling size.
MonotoneClosedForm balance_monotone_closed_form(int n);

struct MonotoneClosedFormF64 {
  long long k = 0;
  double size = 0;
};

// Binary64 variant for sizes where exact harmonic denominators are impractical.
MonotoneClosedFormF64 balance_monotone_closed_form_f64(long long n);

// Removes every edge (u_j, v_i) with i < j. Requires a graph certified perfect
// with the diagonal matching present (relabel first if necessary).
BipartiteGraph strip_backward_edges(const BipartiteGraph& g);

// Renames offline vertices so that some maximum matching becomes the diagonal.
BipartiteGraph relabel_to_diagonal(const BipartiteGraph& g);

// Replay of the water-filling weights where each round is credited the average
// load of the still-active suffix plus an even share of all earlier slack.
// After the first round whose credit reaches 1, every credit is pinned to 1.
template <class Num>
struct AveragingTrace {
  std::vector<Num> credited;   // m'_i(i) per round (post-clamp)
  std::vector<Num> slack;      // s(i) per round
  int stop_round = 0;          // 1-based t'; n+1 if no round reached 1
  Num total{0};                // sum of credited values
};

template <class Num>
AveragingTrace<Num> averaging_process(const BipartiteGraph& g) {
  const int n = g.n();
  if (!g.certified_perfect()) {
    throw std::invalid_argument("averaging process: graph must be certified perfect");
  }
  for (int j = 0; j < n; ++j) {
    if (!g.has_edge(j, j)) {
      throw std::invalid_argument("averaging process: diagonal matching edge missing");
    }
    if (!g.neighbors(j).empty() && g.neighbors(j).front() < j) {
      throw std::invalid_argument("averaging process: graph has backward edges; strip first");
    }
  }

  const BalanceResult<Num> balance = run_balance<Num>(g);
  AveragingTrace<Num> trace;
  trace.stop_round = n + 1;
  std::vector<Num> loads(static_cast<std::size_t>(n), Num(0));
  const Num one(1);

  for (int j = 0; j < n; ++j) {
    for (const auto& [v, add] : balance.steps[j].raised) loads[v] += add;

    Num sum(0);
    Num max_load(0);
    for (int v = j; v < n; ++v) {
      sum += loads[v];
      if (loads[v] > max_load) max_load = loads[v];
    }
    const Num average = sum / Num(n - j);
    trace.slack.push_back(max_load - average);

    if (trace.stop_round <= n) {
      trace.credited.push_back(one);
      continue;
    }
    Num credit = average;
    for (int l = 0; l < j; ++l) credit += trace.slack[l] / Num(n - 1 - l);
    if (credit >= one) {
      trace.stop_round = j + 1;
      trace.credited.push_back(one);
    } else {
      trace.credited.push_back(credit);
    }
  }
  for (const auto& c : trace.credited) trace.total += c;
  return trace;
}

}  // namespace matchlab
