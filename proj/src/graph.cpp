#include "matchlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matchlab {

Permutation Permutation::identity(int n) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<int> copy = ids;
  return Permutation(std::move(ids), std::move(copy));
}

Permutation Permutation::from_items(std::vector<int> items) {
  const int n = static_cast<int>(items.size());
  std::vector<int> ranks(items.size(), -1);
  for (int r = 0; r < n; ++r) {
    const int v = items[r];
    if (v < 0 || v >= n || ranks[v] != -1) {
      throw std::invalid_argument("permutation items are not a bijection on 0..n-1");
    }
    ranks[v] = r;
  }
  return Permutation(std::move(items), std::move(ranks));
}

Permutation Permutation::from_ranks(std::vector<int> ranks) {
  return from_items(std::move(ranks)).inverse();
}

Permutation Permutation::sample(int n, Rng& rng) {
  return from_items(random_index_order(n, rng));
}

BipartiteGraph BipartiteGraph::from_adjacency(int n, std::vector<std::vector<int>> adjacency) {
  if (n <= 0) throw std::invalid_argument("graph size must be positive");
  if (adjacency.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("adjacency must have one row per online vertex");
  }
  for (auto& row : adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (!row.empty() && (row.front() < 0 || row.back() >= n)) {
      throw std::invalid_argument("neighbor index out of range");
    }
  }
  BipartiteGraph g;
  g.n_ = n;
  g.adjacency_ = std::move(adjacency);
  return g;
}

bool BipartiteGraph::has_edge(int online, int offline) const {
  const auto& row = adjacency_[online];
  return std::binary_search(row.begin(), row.end(), offline);
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return total;
}

std::vector<int> IntegralMatching::offline_to_online() const {
  std::vector<int> inverse(online_to_offline.size(), -1);
  for (std::size_t j = 0; j < online_to_offline.size(); ++j) {
    const int i = online_to_offline[j];
    if (i >= 0) inverse[i] = static_cast<int>(j);
  }
  return inverse;
}

BipartiteGraph make_monotone_graph(int n) {
  if (n <= 0) throw std::invalid_argument("graph size must be positive");
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    adjacency[j].resize(static_cast<std::size_t>(n - j));
    std::iota(adjacency[j].begin(), adjacency[j].end(), j);
  }
  return certify(BipartiteGraph::from_adjacency(n, std::move(adjacency)));
}

bool is_monotone_graph(const BipartiteGraph& g) {
  const int n = g.n();
  for (int j = 0; j < n; ++j) {
    const auto& row = g.neighbors(j);
    if (static_cast<int>(row.size()) != n - j || row.front() != j || row.back() != n - 1) {
      return false;
    }
  }
  return true;
}

DnSample sample_dn(int n, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("graph size must be positive");
  Rng rng(seed);
  Permutation tau = Permutation::sample(n, rng);
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    adjacency[j].assign(tau.items().begin() + j, tau.items().end());
  }
  BipartiteGraph graph = certify(BipartiteGraph::from_adjacency(n, std::move(adjacency)));
  return DnSample{std::move(graph), std::move(tau)};
}

namespace {

bool try_augment(const BipartiteGraph& g, int online, std::vector<char>& visited,
                 std::vector<int>& offline_match, std::vector<int>& online_match) {
  for (int v : g.neighbors(online)) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (offline_match[v] < 0 ||
        try_augment(g, offline_match[v], visited, offline_match, online_match)) {
      offline_match[v] = online;
      online_match[online] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

IntegralMatching find_max_matching(const BipartiteGraph& g) {
  const int n = g.n();
  std::vector<int> offline_match(static_cast<std::size_t>(n), -1);
  std::vector<int> online_match(static_cast<std::size_t>(n), -1);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  int size = 0;
  for (int j = 0; j < n; ++j) {
    std::fill(visited.begin(), visited.end(), 0);
    if (try_augment(g, j, visited, offline_match, online_match)) ++size;
  }
  return IntegralMatching{std::move(online_match), size};
}

int max_matching_size(const BipartiteGraph& g) { return find_max_matching(g).size; }

BipartiteGraph certify(BipartiteGraph graph) {
  graph.certified_perfect_ = (max_matching_size(graph) == graph.n());
  return graph;
}

}  // namespace matchlab
