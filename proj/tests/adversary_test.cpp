#include <stdexcept>

#include "doctest.h"
#include "matchlab/adversary.hpp"

using namespace matchlab;

TEST_CASE("the smallest game pins a greedy player to one match") {
  const auto alg = make_lowest_index_greedy();
  const AdversaryTranscript t = run_adaptive_adversary(*alg, 2);
  CHECK(t.decisions == std::vector<int>{0, kSkip});
  CHECK(t.matching_size == 1);
  CHECK(t.max_matching_size == 2);  // {u1-v2, u2-v1} exists in the built graph
  CHECK(t.non_greedy_steps.empty());
  CHECK(t.replay_consistent);
  CHECK(t.graph.adjacency() == t.revealed);
  CHECK(t.graph.neighbors(1) == std::vector<int>{0});
}

TEST_CASE("three distinct greedy strategies all land on exactly half") {
  const std::unique_ptr<OnlineAlgorithm> algorithms[] = {
      make_lowest_index_greedy(),
      make_highest_index_greedy(),
      make_lowest_seen_degree_greedy(),
  };
  for (const auto& alg : algorithms) {
    const AdversaryTranscript t = run_adaptive_adversary(*alg, 6);
    CHECK(t.matching_size == 3);
    CHECK(t.max_matching_size == 6);
    CHECK(t.non_greedy_steps.empty());
    CHECK(t.replay_consistent);
  }
}

TEST_CASE("a fixed-ranking player fares no better") {
  const auto alg = make_fixed_ranking_greedy(99);
  for (int n : {2, 4, 10}) {
    const AdversaryTranscript t = run_adaptive_adversary(*alg, n);
    CHECK(t.matching_size == n / 2);
    CHECK(t.max_matching_size == n);
    CHECK(t.replay_consistent);
  }
}

TEST_CASE("skipping with an exposed neighbor is reported, not rewarded") {
  const auto alg = make_skip_first_arrival();
  const AdversaryTranscript t = run_adaptive_adversary(*alg, 4);
  CHECK(t.decisions[0] == kSkip);
  CHECK(t.non_greedy_steps == std::vector<int>{0});
  CHECK(t.matching_size <= 2);
  CHECK(t.max_matching_size == 4);  // padding keeps the instance well defined
  CHECK(t.replay_consistent);
}

TEST_CASE("transcripts record a valid matching") {
  const auto alg = make_highest_index_greedy();
  const AdversaryTranscript t = run_adaptive_adversary(*alg, 10);
  std::vector<bool> used(static_cast<std::size_t>(t.n), false);
  int matched = 0;
  for (int j = 0; j < t.n; ++j) {
    const int v = t.decisions[j];
    if (v == kSkip) continue;
    CHECK(t.graph.has_edge(j, v));
    CHECK_FALSE(used[v]);
    used[v] = true;
    ++matched;
  }
  CHECK(matched == t.matching_size);
}

TEST_CASE("odd and non-positive sizes are rejected") {
  const auto alg = make_lowest_index_greedy();
  CHECK_THROWS_AS(run_adaptive_adversary(*alg, 5), std::invalid_argument);
  CHECK_THROWS_AS(run_adaptive_adversary(*alg, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_adaptive_adversary(*alg, -2), std::invalid_argument);
}
