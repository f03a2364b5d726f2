#include "matchlab/adversary.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "matchlab/rng.hpp"

namespace matchlab {

namespace {

class LowestIndexGreedy final : public OnlineAlgorithm {
 public:
  std::string name() const override { return "lowest"; }
  int decide(const ArrivalView& view) const override {
    return view.exposed_neighbors.empty() ? kSkip : view.exposed_neighbors.front();
  }
};

class HighestIndexGreedy final : public OnlineAlgorithm {
 public:
  std::string name() const override { return "highest"; }
  int decide(const ArrivalView& view) const override {
    return view.exposed_neighbors.empty() ? kSkip : view.exposed_neighbors.back();
  }
};

class LowestSeenDegreeGreedy final : public OnlineAlgorithm {
 public:
  std::string name() const override { return "lowest-degree-seen"; }
  int decide(const ArrivalView& view) const override {
    if (view.exposed_neighbors.empty()) return kSkip;
    std::vector<int> seen(static_cast<std::size_t>(view.n), 0);
    for (const auto& row : view.revealed) {
      for (int v : row) ++seen[v];
    }
    int best = view.exposed_neighbors.front();
    for (int v : view.exposed_neighbors) {
      if (seen[v] < seen[best]) best = v;
    }
    return best;
  }
};

class FixedRankingGreedy final : public OnlineAlgorithm {
 public:
  explicit FixedRankingGreedy(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "ranking-fixed-pi"; }
  int decide(const ArrivalView& view) const override {
    if (view.exposed_neighbors.empty()) return kSkip;
    Rng rng(seed_);
    const std::vector<int> items = random_index_order(view.n, rng);
    std::vector<int> rank(static_cast<std::size_t>(view.n));
    for (int r = 0; r < view.n; ++r) rank[items[r]] = r;
    int best = view.exposed_neighbors.front();
    for (int v : view.exposed_neighbors) {
      if (rank[v] < rank[best]) best = v;
    }
    return best;
  }

 private:
  std::uint64_t seed_;
};

class SkipFirstArrival final : public OnlineAlgorithm {
 public:
  std::string name() const override { return "skip-first"; }
  int decide(const ArrivalView& view) const override {
    if (view.arrival == 0 || view.exposed_neighbors.empty()) return kSkip;
    return view.exposed_neighbors.front();
  }
};

int ask(const OnlineAlgorithm& algorithm, int n, int arrival,
        const std::vector<std::vector<int>>& revealed, const std::vector<int>& decisions,
        const std::vector<bool>& matched_offline) {
  std::vector<int> exposed;
  for (int v : revealed[arrival]) {
    if (!matched_offline[v]) exposed.push_back(v);
  }
  const ArrivalView view{
      n,
      arrival,
      std::span<const std::vector<int>>(revealed.data(), static_cast<std::size_t>(arrival + 1)),
      std::span<const int>(decisions.data(), static_cast<std::size_t>(arrival)),
      revealed[arrival],
      exposed,
  };
  const int choice = algorithm.decide(view);
  if (choice != kSkip &&
      std::find(exposed.begin(), exposed.end(), choice) == exposed.end()) {
    throw std::logic_error("online algorithm chose a vertex that is not an exposed neighbor");
  }
  return choice;
}

}  // namespace

std::unique_ptr<OnlineAlgorithm> make_lowest_index_greedy() {
  return std::make_unique<LowestIndexGreedy>();
}
std::unique_ptr<OnlineAlgorithm> make_highest_index_greedy() {
  return std::make_unique<HighestIndexGreedy>();
}
std::unique_ptr<OnlineAlgorithm> make_lowest_seen_degree_greedy() {
  return std::make_unique<LowestSeenDegreeGreedy>();
}
std::unique_ptr<OnlineAlgorithm> make_fixed_ranking_greedy(std::uint64_t seed) {
  return std::make_unique<FixedRankingGreedy>(seed);
}
std::unique_ptr<OnlineAlgorithm> make_skip_first_arrival() {
  return std::make_unique<SkipFirstArrival>();
}

AdversaryTranscript run_adaptive_adversary(const OnlineAlgorithm& algorithm, int n) {
  if (n <= 0 || n % 2 != 0) {
    throw std::invalid_argument("adversary: n must be even and positive");
  }
  const int half = n / 2;

  std::vector<std::vector<int>> revealed;
  revealed.reserve(static_cast<std::size_t>(n));
  std::vector<int> decisions;
  std::vector<bool> matched_offline(static_cast<std::size_t>(n), false);
  std::vector<int> non_greedy;
  int matching_size = 0;

  std::vector<int> all_of_v(static_cast<std::size_t>(n));
  std::iota(all_of_v.begin(), all_of_v.end(), 0);

  // Phase 1: full neighborhoods; the adversary watches which vertices get used.
  for (int j = 0; j < half; ++j) {
    revealed.push_back(all_of_v);
    const int choice = ask(algorithm, n, j, revealed, decisions, matched_offline);
    if (choice == kSkip) {
      non_greedy.push_back(j);  // all of V was available
    } else {
      matched_offline[choice] = true;
      ++matching_size;
    }
    decisions.push_back(choice);
  }

  // S = used vertices, padded to exactly n/2 with the lowest unmatched indices
  // so the second phase is well defined even for non-greedy players.
  std::vector<int> used;
  for (int v = 0; v < n; ++v) {
    if (matched_offline[v]) used.push_back(v);
  }
  for (int v = 0; v < n && static_cast<int>(used.size()) < half; ++v) {
    if (!matched_offline[v]) used.push_back(v);
  }
  std::sort(used.begin(), used.end());

  // Phase 2: remaining arrivals see only S.
  for (int j = half; j < n; ++j) {
    revealed.push_back(used);
    const int choice = ask(algorithm, n, j, revealed, decisions, matched_offline);
    if (choice == kSkip) {
      bool has_exposed = false;
      for (int v : used) has_exposed = has_exposed || !matched_offline[v];
      if (has_exposed) non_greedy.push_back(j);
    } else {
      matched_offline[choice] = true;
      ++matching_size;
    }
    decisions.push_back(choice);
  }

  AdversaryTranscript transcript;
  transcript.algorithm = algorithm.name();
  transcript.n = n;
  transcript.graph = certify(BipartiteGraph::from_adjacency(n, revealed));
  transcript.revealed = std::move(revealed);
  transcript.decisions = decisions;
  transcript.matching_size = matching_size;
  transcript.max_matching_size = max_matching_size(transcript.graph);
  transcript.non_greedy_steps = std::move(non_greedy);

  // Determinism audit: replay the recorded reveals and compare decisions.
  std::vector<bool> replay_matched(static_cast<std::size_t>(n), false);
  std::vector<int> replay_decisions;
  bool consistent = true;
  for (int j = 0; j < n && consistent; ++j) {
    const int choice =
        ask(algorithm, n, j, transcript.revealed, replay_decisions, replay_matched);
    consistent = (choice == decisions[j]);
    if (choice != kSkip) replay_matched[choice] = true;
    replay_decisions.push_back(choice);
  }
  transcript.replay_consistent = consistent;
  return transcript;
}

}  // namespace matchlab
