#include <set>
#include <stdexcept>

#include "doctest.h"
#include "matchlab/fractional.hpp"
#include "matchlab/graph.hpp"
#include "matchlab/rng.hpp"

using namespace matchlab;

TEST_CASE("monotone graph rows are nested suffixes") {
  const BipartiteGraph g1 = make_monotone_graph(1);
  CHECK(g1.neighbors(0) == std::vector<int>{0});
  CHECK(g1.certified_perfect());

  const BipartiteGraph g3 = make_monotone_graph(3);
  CHECK(g3.neighbors(0) == std::vector<int>{0, 1, 2});
  CHECK(g3.neighbors(1) == std::vector<int>{1, 2});
  CHECK(g3.neighbors(2) == std::vector<int>{2});
  CHECK(max_matching_size(g3) == 3);
  CHECK(is_monotone_graph(g3));

  CHECK(max_matching_size(make_monotone_graph(4)) == 4);
  CHECK_THROWS_AS(make_monotone_graph(0), std::invalid_argument);
}

TEST_CASE("adjacency rows are sorted, deduplicated, and range-checked") {
  const BipartiteGraph g = BipartiteGraph::from_adjacency(3, {{2, 0, 2}, {}, {1, 1}});
  CHECK(g.neighbors(0) == std::vector<int>{0, 2});
  CHECK(g.neighbors(1).empty());
  CHECK(g.neighbors(2) == std::vector<int>{1});
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_FALSE(g.certified_perfect());
  CHECK_THROWS_AS(BipartiteGraph::from_adjacency(2, {{0, 5}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph::from_adjacency(2, {{0}}), std::invalid_argument);
}

TEST_CASE("maximum matching oracle handles shared neighbors") {
  // two arrivals fighting over one offline vertex
  const BipartiteGraph g = BipartiteGraph::from_adjacency(2, {{0}, {0}});
  CHECK(max_matching_size(g) == 1);
  const IntegralMatching m = find_max_matching(g);
  CHECK(m.size == 1);
  CHECK(((m.online_to_offline[0] == 0) != (m.online_to_offline[1] == 0)));

  const BipartiteGraph certified_g = certify(g);
  CHECK_FALSE(certified_g.certified_perfect());
}

TEST_CASE("nested-suffix samples expose the hidden permutation") {
  for (std::uint64_t seed : {0ull, 1ull, 2ull, 77ull}) {
    const DnSample sample = sample_dn(6, seed);
    const auto& g = sample.graph;
    CHECK(g.certified_perfect());
    for (int j = 0; j < 6; ++j) {
      CHECK(static_cast<int>(g.neighbors(j).size()) == 6 - j);
      const std::set<int> row(g.neighbors(j).begin(), g.neighbors(j).end());
      CHECK(row.count(sample.tau.item_at(j)) == 1);
      if (j + 1 < 6) {
        for (int v : g.neighbors(j + 1)) CHECK(row.count(v) == 1);
      }
      // relabeling each neighbor by its tau-rank recovers the suffix {j..n-1}
      std::set<int> ranks;
      for (int v : g.neighbors(j)) ranks.insert(sample.tau.rank_of(v));
      CHECK(*ranks.begin() == j);
      CHECK(*ranks.rbegin() == 5);
      CHECK(static_cast<int>(ranks.size()) == 6 - j);
    }
  }

  // identical seeds reproduce; these two differ
  CHECK(sample_dn(5, 11).tau == sample_dn(5, 11).tau);
  CHECK(sample_dn(5, 1).tau != sample_dn(5, 2).tau);
}

TEST_CASE("an identity sample reproduces the monotone graph") {
  // half of all seeds give the identity at n = 2; find one and check the rows
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const DnSample sample = sample_dn(2, seed);
    if (sample.tau == Permutation::identity(2)) {
      CHECK(sample.graph == make_monotone_graph(2));
      return;
    }
  }
  FAIL("no identity permutation among 64 seeds at n = 2");
}

TEST_CASE("every nested-suffix sample has a perfect matching") {
  for (int n = 1; n <= 50; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      CHECK(max_matching_size(sample_dn(n, seed).graph) == n);
    }
  }
}

TEST_CASE("permutations invert and round-trip") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Permutation pi = Permutation::sample(12, rng);
    CHECK(pi.inverse().inverse() == pi);
    for (int v = 0; v < 12; ++v) CHECK(pi.item_at(pi.rank_of(v)) == v);
  }
  CHECK_THROWS_AS(Permutation::from_items({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_items({0, 3}), std::invalid_argument);
}

TEST_CASE("graph JSON round-trips with 1-based indices") {
  const BipartiteGraph g = BipartiteGraph::from_adjacency(3, {{0, 2}, {1}, {}});
  const std::string text = graph_to_json(g);
  CHECK(text == R"({"n":3,"adjacency":[[1,3],[2],[]]})");
  const BipartiteGraph back = graph_from_json(text);
  CHECK(back == g);
  CHECK_THROWS_AS(graph_from_json(R"({"n":2,"adjacency":[[3],[1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n":2})"), std::invalid_argument);
}

TEST_CASE("fractional validation flags every kind of breach") {
  const BipartiteGraph g = make_monotone_graph(3);

  FractionalMatching<double> empty(3);
  CHECK(validate_fractional(g, empty).valid());
  CHECK(empty.size() == 0.0);

  FractionalMatching<double> bad(3);
  bad.add_weight(0, 0, 0.7);
  bad.add_weight(1, 0, 0.5);  // offline load 1.2
  const auto report = validate_fractional(g, bad);
  CHECK_FALSE(report.valid());
  bool found = false;
  for (const auto& v : report.violations) {
    found = found || (v.kind == ViolationKind::OfflineLoadExceedsOne &&
                      v.message == "offline load exceeds one");
  }
  CHECK(found);

  FractionalMatching<BigRat> non_edge(3);
  non_edge.add_weight(2, 0, BigRat(1, 2));  // arrival 2 only neighbors vertex 2
  const auto report2 = validate_fractional(g, non_edge);
  CHECK_FALSE(report2.valid());
  CHECK(report2.violations[0].kind == ViolationKind::WeightOnNonEdge);

  FractionalMatching<BigRat> negative(3);
  negative.add_weight(0, 0, BigRat(-1, 2));
  bool has_negative = false;
  for (const auto& v : validate_fractional(g, negative).violations) {
    has_negative = has_negative || v.kind == ViolationKind::NegativeWeight;
  }
  CHECK(has_negative);

  FractionalMatching<double> inconsistent(3);
  inconsistent.add_weight(0, 0, 0.5);
  inconsistent.loads_offline[0] = 0.25;  // stored load no longer matches the weights
  bool mismatch = false;
  for (const auto& v : validate_fractional(g, inconsistent).violations) {
    mismatch = mismatch || v.kind == ViolationKind::LoadMismatch;
  }
  CHECK(mismatch);
}
