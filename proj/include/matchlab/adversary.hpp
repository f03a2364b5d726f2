#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matchlab/graph.hpp"

namespace matchlab {

inline constexpr int kSkip = -1;

// Everything an online algorithm may look at when arrival `arrival` shows up:
// all neighbor sets revealed so far, all prior decisions, and the exposed
// subset of the current neighborhood (derivable from the decisions; passed
// along for convenience).
struct ArrivalView {
  int n = 0;
  int arrival = 0;                                  // 0-based
  std::span<const std::vector<int>> revealed;       // revealed[0..arrival]
  std::span<const int> decisions;                   // decisions[0..arrival-1]
  const std::vector<int>& neighbors;                // = revealed[arrival]
  const std::vector<int>& exposed_neighbors;        // sorted ascending
};

// Deterministic online matching strategy: same history must yield the same
// decision (the harness replays the transcript to audit this).
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual std::string name() const = 0;
  // Returns the chosen exposed neighbor, or kSkip.
  virtual int decide(const ArrivalView& view) const = 0;
};

// Built-in strategies. The first three are greedy; skip_first_arrival exists
// only to exercise the non-greedy reporting path.
std::unique_ptr<OnlineAlgorithm> make_lowest_index_greedy();
std::unique_ptr<OnlineAlgorithm> make_highest_index_greedy();
// Prefers the exposed neighbor seen in the fewest revealed neighbor sets so far.
std::unique_ptr<OnlineAlgorithm> make_lowest_seen_degree_greedy();
// Rank-greedy matching with one fixed ranking, sampled from the given seed.
std::unique_ptr<OnlineAlgorithm> make_fixed_ranking_greedy(std::uint64_t seed = 1);
std::unique_ptr<OnlineAlgorithm> make_skip_first_arrival();

struct AdversaryTranscript {
  std::string algorithm;
  int n = 0;
  BipartiteGraph graph;                    // the constructed instance
  std::vector<std::vector<int>> revealed;  // equals the graph's adjacency
  std::vector<int> decisions;              // offline index or kSkip per arrival
  int matching_size = 0;
  int max_matching_size = 0;               // oracle-certified on the final graph
  std::vector<int> non_greedy_steps;       // arrivals that skipped an exposed neighbor
  bool replay_consistent = false;          // determinism audit
};

// Adaptive instance construction: the first n/2 arrivals see all of V, the
// rest see only the offline vertices the algorithm used up (padded with the
// lowest-index unmatched vertices if the algorithm matched fewer than n/2).
// Greedy algorithms finish with exactly n/2 matched while the constructed
// graph always admits a perfect matching.
AdversaryTranscript run_adaptive_adversary(const OnlineAlgorithm& algorithm, int n);

}  // namespace matchlab
