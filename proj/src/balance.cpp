#include "matchlab/balance.hpp"

#include <stdexcept>

namespace matchlab {

MonotoneClosedForm balance_monotone_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("closed form: n must be positive");
  BigRat harmonic(0);  // H_n - H_{n-k}
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    const BigRat next = harmonic + BigRat(1, n - i + 1);
    if (next > 1) break;
    harmonic = next;
    k = i;
  }
  MonotoneClosedForm result;
  result.k = k;
  result.size = BigRat(k) + BigRat(n - k) * (BigRat(1) - harmonic);
  return result;
}

MonotoneClosedFormF64 balance_monotone_closed_form_f64(long long n) {
  if (n < 1) throw std::invalid_argument("closed form: n must be positive");
  double harmonic = 0;
  long long k = 0;
  for (long long i = 1; i <= n; ++i) {
    const double next = harmonic + 1.0 / static_cast<double>(n - i + 1);
    if (next > 1.0) break;
    harmonic = next;
    k = i;
  }
  MonotoneClosedFormF64 result;
  result.k = k;
  result.size = static_cast<double>(k) + static_cast<double>(n - k) * (1.0 - harmonic);
  return result;
}

BipartiteGraph strip_backward_edges(const BipartiteGraph& g) {
  const int n = g.n();
  if (!g.certified_perfect()) {
    throw std::invalid_argument("strip: graph must be certified perfect");
  }
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (!g.has_edge(j, j)) {
      throw std::invalid_argument("strip: diagonal matching edge missing; relabel first");
    }
    for (int v : g.neighbors(j)) {
      if (v >= j) adjacency[j].push_back(v);
    }
  }
  return certify(BipartiteGraph::from_adjacency(n, std::move(adjacency)));
}

BipartiteGraph relabel_to_diagonal(const BipartiteGraph& g) {
  const IntegralMatching matching = find_max_matching(g);
  if (matching.size != g.n()) {
    throw std::invalid_argument("relabel: graph has no perfect matching");
  }
  // new_name[old offline index] = arrival it is matched to
  std::vector<int> new_name(static_cast<std::size_t>(g.n()), -1);
  for (int j = 0; j < g.n(); ++j) new_name[matching.online_to_offline[j]] = j;
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(g.n()));
  for (int j = 0; j < g.n(); ++j) {
    for (int v : g.neighbors(j)) adjacency[j].push_back(new_name[v]);
  }
  return certify(BipartiteGraph::from_adjacency(g.n(), std::move(adjacency)));
}

}  // namespace matchlab
