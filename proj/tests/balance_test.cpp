#include <stdexcept>

#include "doctest.h"
#include "matchlab/balance.hpp"
#include "matchlab/rng.hpp"

using namespace matchlab;

namespace {

// diagonal plus random off-diagonal edges; certified by the oracle
BipartiteGraph random_diagonal_graph(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j || (rng.next() & 1ull)) adjacency[j].push_back(i);
    }
  }
  return certify(BipartiteGraph::from_adjacency(n, std::move(adjacency)));
}

}  // namespace

TEST_CASE("water-filling splits budgets to a common threshold") {
  const auto result = run_balance<BigRat>(make_monotone_graph(2));
  REQUIRE(result.steps.size() == 2);
  CHECK(result.steps[0].budget == BigRat(1));
  CHECK(*result.steps[0].threshold == BigRat(1, 2));
  CHECK(result.steps[0].raised ==
        std::vector<std::pair<int, BigRat>>{{0, BigRat(1, 2)}, {1, BigRat(1, 2)}});
  CHECK(result.steps[1].budget == BigRat(1, 2));
  CHECK(*result.steps[1].threshold == BigRat(1));
  CHECK(result.size() == BigRat(3, 2));
  CHECK(validate_fractional(make_monotone_graph(2), result.matching).valid());
}

TEST_CASE("a lone arrival splits its unit budget between fresh neighbors") {
  const BipartiteGraph g = BipartiteGraph::from_adjacency(2, {{0, 1}, {}});
  const auto result = run_balance<BigRat>(g);
  CHECK(*result.steps[0].threshold == BigRat(1, 2));
  CHECK(result.matching.loads_offline[0] == BigRat(1, 2));
  CHECK(result.matching.loads_offline[1] == BigRat(1, 2));
  // the neighborless arrival contributes an empty step
  CHECK(result.steps[1].budget == BigRat(0));
  CHECK(result.steps[1].raised.empty());
  CHECK_FALSE(result.steps[1].threshold.has_value());
}

TEST_CASE("saturated neighborhoods clamp the budget to zero") {
  const BipartiteGraph g = BipartiteGraph::from_adjacency(3, {{0}, {0}, {0, 1, 2}});
  const auto result = run_balance<BigRat>(g);
  CHECK(result.matching.loads_offline[0] == BigRat(1));
  CHECK(result.steps[1].budget == BigRat(0));  // arrival 1's only neighbor is full
  CHECK(result.steps[1].raised.empty());
  CHECK(result.size() == BigRat(2));
}

TEST_CASE("monotone arrivals keep the active suffix perfectly level") {
  const int n = 12;
  const auto result = run_balance<BigRat>(make_monotone_graph(n));
  const int k = balance_monotone_closed_form(n).k;
  std::vector<BigRat> loads(static_cast<std::size_t>(n), BigRat(0));
  BigRat level(0);
  for (int j = 0; j < k; ++j) {
    for (const auto& [v, add] : result.steps[j].raised) loads[v] += add;
    level += BigRat(1, n - j);
    for (int i = j; i < n; ++i) CHECK(loads[i] == level);
  }
  CHECK(validate_fractional(make_monotone_graph(5),
                            run_balance<BigRat>(make_monotone_graph(5)).matching)
            .valid());
}

TEST_CASE("monotone closed form matches the exact run") {
  const auto cf2 = balance_monotone_closed_form(2);
  CHECK(cf2.k == 1);
  CHECK(cf2.size == BigRat(3, 2));

  const auto cf6 = balance_monotone_closed_form(6);
  CHECK(cf6.k == 4);
  CHECK(cf6.size == BigRat(41, 10));
  CHECK(run_balance<BigRat>(make_monotone_graph(6)).size() == BigRat(41, 10));

  for (int n = 1; n <= 24; ++n) {
    CHECK(run_balance<BigRat>(make_monotone_graph(n)).size() ==
          balance_monotone_closed_form(n).size);
  }
  CHECK_THROWS_AS(balance_monotone_closed_form(0), std::invalid_argument);
}

TEST_CASE("the large-n deviation settles near 1/2 - 1/(2e)") {
  const double target = constants::half_minus_half_inv_e_f64();
  const auto cf = balance_monotone_closed_form_f64(10000);
  const double dev = cf.size - constants::one_minus_inv_e_f64() * 10000;
  CHECK(dev >= 0.30);
  CHECK(dev <= 0.33);
  CHECK(std::abs(dev - target) < 0.001);
  // agreement between the exact and float evaluations
  const auto exact = balance_monotone_closed_form(64);
  const auto approx = balance_monotone_closed_form_f64(64);
  CHECK(approx.k == exact.k);
  CHECK(std::abs(approx.size - to_double(exact.size)) < 1e-12);
}

TEST_CASE("water-fill step invariants hold on random graphs in both modes") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const BipartiteGraph g = random_diagonal_graph(8, seed);

    const auto exact = run_balance<BigRat>(g);
    for (const auto& step : exact.steps) {
      BigRat spent(0);
      for (const auto& [v, add] : step.raised) {
        CHECK(add > BigRat(0));
        CHECK(exact.matching.loads_offline[v] <= BigRat(1));
        spent += add;
      }
      if (step.threshold) {
        CHECK(spent == step.budget);  // budget fully spent once a threshold exists
      }
    }
    // raised neighbors end a step at exactly the threshold load
    std::vector<BigRat> loads(8, BigRat(0));
    for (const auto& step : exact.steps) {
      for (const auto& [v, add] : step.raised) {
        loads[v] += add;
        CHECK(loads[v] == *step.threshold);
      }
    }
    CHECK(validate_fractional(g, exact.matching).valid());

    const auto approx = run_balance<double>(g);
    CHECK(validate_fractional(g, approx.matching).valid());
    CHECK(std::abs(approx.size() - to_double(exact.size())) < 1e-9);
    std::vector<double> fl(8, 0.0);
    for (const auto& step : approx.steps) {
      for (const auto& [v, add] : step.raised) {
        fl[v] += add;
        CHECK(std::abs(fl[v] - *step.threshold) <= kFloatTolerance);
      }
    }
  }
}

TEST_CASE("water-filling matches at least half of the maximum matching") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const BipartiteGraph g = random_diagonal_graph(8, seed);
    CHECK(run_balance<BigRat>(g).size() * 2 >= BigRat(max_matching_size(g)));
  }
}

TEST_CASE("backward-edge stripping preserves the diagonal and drops the rest") {
  const BipartiteGraph monotone = make_monotone_graph(5);
  CHECK(strip_backward_edges(monotone) == monotone);

  BipartiteGraph with_backward = certify(BipartiteGraph::from_adjacency(
      3, {{0, 1, 2}, {1, 2}, {0, 2}}));  // arrival 2 also sees vertex 0
  const BipartiteGraph stripped = strip_backward_edges(with_backward);
  CHECK(stripped == make_monotone_graph(3));

  const BipartiteGraph no_diagonal =
      certify(BipartiteGraph::from_adjacency(2, {{1}, {0}}));
  CHECK_THROWS_AS(strip_backward_edges(no_diagonal), std::invalid_argument);

  const BipartiteGraph uncertified = BipartiteGraph::from_adjacency(2, {{0, 1}, {1}});
  CHECK_THROWS_AS(strip_backward_edges(uncertified), std::invalid_argument);
}

TEST_CASE("stripping never increases the water-filling size") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const BipartiteGraph g = random_diagonal_graph(8, seed);
    const BipartiteGraph stripped = strip_backward_edges(g);
    CHECK(run_balance<BigRat>(stripped).size() <= run_balance<BigRat>(g).size());
  }
}

TEST_CASE("relabeling turns a nested-suffix sample into the monotone graph") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DnSample sample = sample_dn(8, seed);
    const BipartiteGraph relabeled = relabel_to_diagonal(sample.graph);
    CHECK(relabeled == make_monotone_graph(8));
  }
  const BipartiteGraph no_perfect = BipartiteGraph::from_adjacency(2, {{0}, {0}});
  CHECK_THROWS_AS(relabel_to_diagonal(no_perfect), std::invalid_argument);
}

TEST_CASE("averaging on the monotone graph is the water-filling run itself") {
  for (int n = 1; n <= 20; ++n) {
    const BipartiteGraph g = make_monotone_graph(n);
    const auto trace = averaging_process<BigRat>(g);
    for (const auto& s : trace.slack) CHECK(s == BigRat(0));
    CHECK(trace.total == run_balance<BigRat>(g).size());
    // per-round credits are the partial harmonic sums until the stop round
    BigRat harmonic(0);
    for (int i = 1; i < trace.stop_round; ++i) {
      harmonic += BigRat(1, n - i + 1);
      CHECK(trace.credited[i - 1] == harmonic);
    }
    for (int i = trace.stop_round; i <= n; ++i) CHECK(trace.credited[i - 1] == BigRat(1));
  }
}

TEST_CASE("averaging credits a sparse instance strictly below its run") {
  // arrival 0 sees everyone, arrivals 1 and 2 only their own vertex
  const BipartiteGraph g =
      certify(BipartiteGraph::from_adjacency(3, {{0, 1, 2}, {1}, {2}}));
  const auto balance = run_balance<BigRat>(g);
  CHECK(balance.size() == BigRat(7, 3));
  const auto trace = averaging_process<BigRat>(g);
  CHECK(trace.credited == std::vector<BigRat>{BigRat(1, 3), BigRat(2, 3), BigRat(1)});
  CHECK(trace.slack == std::vector<BigRat>{BigRat(0), BigRat(1, 3), BigRat(0)});
  CHECK(trace.stop_round == 3);
  CHECK(trace.total == BigRat(2));
  CHECK(trace.total < balance.size());
}

TEST_CASE("averaged credits never exceed the water-filling size") {
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const BipartiteGraph g = strip_backward_edges(random_diagonal_graph(8, seed));
    const auto trace = averaging_process<BigRat>(g);
    CHECK(trace.total <= run_balance<BigRat>(g).size());
    CHECK(trace.stop_round <= 8);  // the last arrival always fills its own vertex
    for (const auto& s : trace.slack) CHECK(s >= BigRat(0));
  }
}

TEST_CASE("averaging rejects graphs that skip its preconditions") {
  const BipartiteGraph backward =
      certify(BipartiteGraph::from_adjacency(2, {{0, 1}, {0, 1}}));
  CHECK_THROWS_AS(averaging_process<BigRat>(backward), std::invalid_argument);
  const BipartiteGraph uncertified = BipartiteGraph::from_adjacency(2, {{0, 1}, {1}});
  CHECK_THROWS_AS(averaging_process<BigRat>(uncertified), std::invalid_argument);
}

TEST_CASE("float-mode averaging tracks the exact trace") {
  const BipartiteGraph g = make_monotone_graph(10);
  const auto exact = averaging_process<BigRat>(g);
  const auto approx = averaging_process<double>(g);
  CHECK(approx.stop_round == exact.stop_round);
  CHECK(std::abs(approx.total - to_double(exact.total)) < 1e-9);
}
