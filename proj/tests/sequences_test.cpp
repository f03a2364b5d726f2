#include <map>
#include <stdexcept>

#include "doctest.h"
#include "matchlab/ranking.hpp"
#include "matchlab/sequences.hpp"

using namespace matchlab;

TEST_CASE("derangement numbers follow the recurrence") {
  CHECK(derangements(0) == 1);
  CHECK(derangements(1) == 0);
  CHECK(derangements(4) == 9);
  CHECK(derangements(8) == 14833);
  CHECK(derangements(20) == BigInt("895014631192902121"));
  CHECK_THROWS_AS(derangements(-1), std::invalid_argument);
}

TEST_CASE("derangements are n!/e rounded to the nearest integer") {
  const Dec50 e = exp(Dec50(1));
  for (int n = 1; n <= 30; ++n) {
    const Dec50 gap = boost::multiprecision::abs(to_dec50(derangements(n)) -
                                                 to_dec50(factorial(n)) / e);
    CHECK(gap < Dec50(1) / 2);
  }
}

TEST_CASE("difference triangle reproduces the reference rows") {
  const CountTriangle t = d_triangle(12);
  CHECK(t.at(3, 1) == 3);
  const BigInt row6[] = {309, 362, 426, 504, 600, 720};
  for (int i = 1; i <= 6; ++i) CHECK(t.at(6, i) == row6[i - 1]);
  for (int n = 1; n <= 12; ++n) CHECK(t.at(n, n) == factorial(n));
  // recurrence and first-column identity
  for (int n = 2; n <= 12; ++n) {
    for (int i = 1; i < n; ++i) CHECK(t.at(n, i + 1) == t.at(n, i) + t.at(n - 1, i));
    CHECK(t.at(n, 1) == derangements(n) + derangements(n - 1));
  }
}

TEST_CASE("triangle cells equal brute-force fixpoint-prefix counts") {
  CHECK(fixpoint_prefix_count_bruteforce(3, 1) == 3);
  CHECK(fixpoint_prefix_count_bruteforce(3, 3) == 6);
  CHECK(fixpoint_prefix_count_bruteforce(5, 2) == 64);
  const CountTriangle t = d_triangle(6);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) CHECK(t.at(n, i) == fixpoint_prefix_count_bruteforce(n, i));
  }
  CHECK_THROWS_AS(fixpoint_prefix_count_bruteforce(9, 1), std::invalid_argument);
}

TEST_CASE("a(n) via the derangement formula and via row sums") {
  const BigInt expected[] = {1, 3, 13, 67, 411, 2921, 23633};
  for (int n = 1; n <= 7; ++n) CHECK(a_exact(n) == expected[n - 1]);
  CHECK(a_exact(1) == 1);

  const auto sums = a_row_sums(20);
  CHECK(sums[4] == 411);
  CHECK(sums[1] == 3);
  CHECK(sums[5] == 2921);
  const CountTriangle t = d_triangle(21);
  for (int n = 1; n <= 20; ++n) {
    CHECK(sums[n - 1] == a_exact(n));
    CHECK(a_exact(n) == factorial(n + 1) - t.at(n + 1, 1));
  }
}

TEST_CASE("exact expectation and its deviation bound") {
  CHECK(rho_ranking_monotone(3).rho == BigRat(13, 6));
  CHECK(rho_ranking_monotone(1).rho == BigRat(1));

  const ExactRho r4 = rho_ranking_monotone(4);
  CHECK(r4.rho == BigRat(67, 24));
  CHECK(r4.nu < Dec50("-0.0010"));
  CHECK(r4.nu > Dec50("-0.0011"));
  CHECK(boost::multiprecision::abs(r4.nu) < r4.nu_bound);

  for (int n = 1; n <= 20; ++n) {
    const ExactRho r = rho_ranking_monotone(n);
    CHECK(boost::multiprecision::abs(r.nu) < r.nu_bound);
  }
}

namespace {

std::uint64_t perm_code(const Permutation& p) {
  std::uint64_t code = 0;
  std::vector<int> remaining;
  for (int v = 0; v < p.n(); ++v) remaining.push_back(v);
  for (int r = 0; r < p.n(); ++r) {
    const auto it = std::find(remaining.begin(), remaining.end(), p.item_at(r));
    code = code * remaining.size() + static_cast<std::uint64_t>(it - remaining.begin());
    remaining.erase(it);
  }
  return code;
}

}  // namespace

TEST_CASE("rank insertion appends cleanly and round-trips") {
  const Permutation pi = Permutation::from_items({2, 0, 1});
  const Permutation appended = bijection_b(pi, 3);
  CHECK(appended.items() == std::vector<int>{2, 0, 1, 3});
  const auto [back, i] = bijection_b_inverse(appended);
  CHECK(back == pi);
  CHECK(i == 3);

  const Permutation swapped = bijection_b(pi, 0);  // vertex 3 takes vertex 0's rank
  CHECK(swapped.items() == std::vector<int>{2, 3, 1, 0});
  const auto [back2, i2] = bijection_b_inverse(swapped);
  CHECK(back2 == pi);
  CHECK(i2 == 0);
}

TEST_CASE("rank insertion is a bijection tied to matched arrivals") {
  for (int n = 1; n <= 6; ++n) {
    const BipartiteGraph small = make_monotone_graph(n);
    const BipartiteGraph big = make_monotone_graph(n + 1);
    std::map<std::uint64_t, int> seen;
    std::uint64_t last_rank_unmatched = 0;
    std::vector<int> items(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) items[v] = v;
    do {
      const Permutation pi = Permutation::from_items(items);
      const RankingRun run_small = run_ranking(small, pi);
      for (int i = 0; i <= n; ++i) {
        const Permutation image = bijection_b(pi, i);
        CHECK(++seen[perm_code(image)] == 1);
        const auto [back, back_i] = bijection_b_inverse(image);
        CHECK(back == pi);
        CHECK(back_i == i);

        const RankingRun run_big = run_ranking(big, image);
        const bool last_unmatched = !run_big.matched_ranks[n];
        if (last_unmatched) ++last_rank_unmatched;
        if (i < n) {
          // image leaves its last rank unmatched iff arrival i was matched
          CHECK(last_unmatched == (run_small.matching.online_to_offline[i] >= 0));
        } else {
          CHECK_FALSE(last_unmatched);  // the appended vertex neighbors everyone
        }
      }
    } while (std::next_permutation(items.begin(), items.end()));
    CHECK(BigInt(seen.size()) == factorial(n + 1));
    const CountTriangle t = d_triangle(n + 1);
    CHECK(BigInt(last_rank_unmatched) == factorial(n + 1) - t.at(n + 1, 1));
  }
}
