#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

// Fractional weights run in one of two modes: exact rationals (BigRat) where
// the identities being tested are exact, binary64 elsewhere. Comparisons in
// float mode use kFloatTolerance; rational mode compares exactly.
inline constexpr double kFloatTolerance = 1e-9;

template <class Num>
struct numeric_mode {
  static constexpr bool exact = true;
  static Num tolerance() { return Num(0); }
};

template <>
struct numeric_mode<double> {
  static constexpr bool exact = false;
  static double tolerance() { return kFloatTolerance; }
};

template <class Num>
struct FractionalMatching {
  explicit FractionalMatching(int n)
      : loads_offline(static_cast<std::size_t>(n), Num(0)),
        loads_online(static_cast<std::size_t>(n), Num(0)) {}

  std::map<std::pair<int, int>, Num> weights;  // (online, offline) -> weight
  std::vector<Num> loads_offline;
  std::vector<Num> loads_online;

  int n() const { return static_cast<int>(loads_offline.size()); }

  void add_weight(int online, int offline, const Num& w) {
    weights[{online, offline}] += w;
    loads_online[online] += w;
    loads_offline[offline] += w;
  }

  Num size_from_weights() const {
    Num total(0);
    for (const auto& [edge, w] : weights) total += w;
    return total;
  }
  Num size_from_offline_loads() const {
    Num total(0);
    for (const auto& l : loads_offline) total += l;
    return total;
  }
  Num size_from_online_loads() const {
    Num total(0);
    for (const auto& l : loads_online) total += l;
    return total;
  }
  Num size() const { return size_from_offline_loads(); }
};

enum class ViolationKind {
  NegativeWeight,
  WeightOnNonEdge,
  OfflineLoadExceedsOne,
  OnlineLoadExceedsOne,
  LoadMismatch,
  SizeMismatch,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  int online = -1;
  int offline = -1;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Recomputes loads and the three size expressions from the raw weights and
// reports every inconsistency, cap breach, negative weight, and non-edge.
template <class Num>
ValidationReport validate_fractional(const BipartiteGraph& g, const FractionalMatching<Num>& f) {
  ValidationReport report;
  const Num tol = numeric_mode<Num>::tolerance();
  const Num one(1);
  const int n = g.n();

  std::vector<Num> off_sum(static_cast<std::size_t>(n), Num(0));
  std::vector<Num> on_sum(static_cast<std::size_t>(n), Num(0));
  for (const auto& [edge, w] : f.weights) {
    const auto [j, i] = edge;
    if (w < Num(0)) {
      report.violations.push_back({ViolationKind::NegativeWeight, "negative weight", j, i});
    }
    if (!g.has_edge(j, i)) {
      report.violations.push_back({ViolationKind::WeightOnNonEdge, "weight on non-edge", j, i});
    }
    on_sum[j] += w;
    off_sum[i] += w;
  }
  auto differs = [&](const Num& a, const Num& b) {
    const Num d = a < b ? b - a : a - b;
    return d > tol;
  };
  for (int i = 0; i < n; ++i) {
    if (f.loads_offline[i] > one + tol) {
      report.violations.push_back(
          {ViolationKind::OfflineLoadExceedsOne, "offline load exceeds one", -1, i});
    }
    if (differs(off_sum[i], f.loads_offline[i])) {
      report.violations.push_back(
          {ViolationKind::LoadMismatch, "offline load differs from weight column sum", -1, i});
    }
  }
  for (int j = 0; j < n; ++j) {
    if (f.loads_online[j] > one + tol) {
      report.violations.push_back(
          {ViolationKind::OnlineLoadExceedsOne, "online load exceeds one", j, -1});
    }
    if (differs(on_sum[j], f.loads_online[j])) {
      report.violations.push_back(
          {ViolationKind::LoadMismatch, "online load differs from weight row sum", j, -1});
    }
  }
  const Num by_w = f.size_from_weights();
  const Num by_off = f.size_from_offline_loads();
  const Num by_on = f.size_from_online_loads();
  if (differs(by_w, by_off) || differs(by_w, by_on)) {
    report.violations.push_back(
        {ViolationKind::SizeMismatch, "size differs across weights/offline/online sums"});
  }
  return report;
}

}  // namespace matchlab
