#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matchlab/rng.hpp"

namespace matchlab {

// A ranking of n offline vertices. Stored both ways round:
//   ranks()[v] = rank of vertex v,  items()[r] = vertex holding rank r.
// All indices and ranks are 0-based; serialization converts to 1-based.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation

  static Permutation identity(int n);
  static Permutation from_items(std::vector<int> items);
  static Permutation from_ranks(std::vector<int> ranks);
  static Permutation sample(int n, Rng& rng);

  int n() const { return static_cast<int>(items_.size()); }
  int item_at(int rank) const { return items_[rank]; }
  int rank_of(int vertex) const { return ranks_[vertex]; }
  const std::vector<int>& items() const { return items_; }
  const std::vector<int>& ranks() const { return ranks_; }

  Permutation inverse() const { return Permutation(ranks_, items_); }

  bool operator==(const Permutation& other) const = default;

 private:
  Permutation(std::vector<int> items, std::vector<int> ranks)
      : items_(std::move(items)), ranks_(std::move(ranks)) {}

  std::vector<int> items_;
  std::vector<int> ranks_;
};

// Bipartite graph on n online (arrival-ordered) and n offline vertices.
// Neighbor lists are sorted, deduplicated, and immutable after construction.
// The certified_perfect flag is only ever set by running the maximum-matching
// oracle, never assumed.
class BipartiteGraph {
 public:
  static BipartiteGraph from_adjacency(int n, std::vector<std::vector<int>> adjacency);

  int n() const { return n_; }
  const std::vector<int>& neighbors(int online) const { return adjacency_[online]; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  bool has_edge(int online, int offline) const;
  std::size_t edge_count() const;

  bool certified_perfect() const { return certified_perfect_; }

  bool operator==(const BipartiteGraph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  friend BipartiteGraph certify(BipartiteGraph graph);

  int n_ = 0;
  std::vector<std::vector<int>> adjacency_;
  bool certified_perfect_ = false;
};

// Partial matching; online_to_offline[j] = offline partner of arrival j, or -1.
struct IntegralMatching {
  std::vector<int> online_to_offline;
  int size = 0;

  std::vector<int> offline_to_online() const;
};

// N(u_j) = {j, j+1, ..., n-1}; certified perfect via the oracle.
BipartiteGraph make_monotone_graph(int n);
bool is_monotone_graph(const BipartiteGraph& g);

struct DnSample {
  BipartiteGraph graph;
  Permutation tau;  // hidden permutation; N(u_j) = {tau_j, ..., tau_{n-1}}
};

// Nested-suffix random instance; same (n, seed) always yields the same sample.
DnSample sample_dn(int n, std::uint64_t seed);

// Exact maximum matching via augmenting-path (Kuhn) search.
IntegralMatching find_max_matching(const BipartiteGraph& g);
int max_matching_size(const BipartiteGraph& g);

// Runs the oracle and returns a copy with the certified_perfect flag set iff
// the maximum matching has size n.
BipartiteGraph certify(BipartiteGraph graph);

// JSON fixture format: {"n": n, "adjacency": [[...], ...]} with 1-based indices.
std::string graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(std::string_view text);

}  // namespace matchlab
