#include "matchlab/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matchlab {

BigInt derangements(int n) {
  if (n < 0) throw std::invalid_argument("derangements: n must be nonnegative");
  BigInt d = 1;  // d(0)
  for (int k = 1; k <= n; ++k) {
    d = k * d + (k % 2 == 0 ? 1 : -1);
  }
  return d;
}

CountTriangle::CountTriangle(int n_max) {
  if (n_max < 1) throw std::invalid_argument("d_triangle: n_max must be positive");
  rows_.resize(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    auto& row = rows_[n - 1];
    row.resize(static_cast<std::size_t>(n));
    row[n - 1] = factorial(static_cast<unsigned>(n));
    for (int i = n - 1; i >= 1; --i) {
      row[i - 1] = row[i] - rows_[n - 2][i - 1];
    }
  }
}

BigInt CountTriangle::row_sum(int n) const {
  BigInt total = 0;
  for (const auto& v : rows_[n - 1]) total += v;
  return total;
}

CountTriangle d_triangle(int n_max) { return CountTriangle(n_max); }

BigInt fixpoint_prefix_count_bruteforce(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("fixpoint count: need 1 <= i <= n");
  if (n > 8) throw std::invalid_argument("fixpoint count: brute force capped at n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt count = 0;
  do {
    bool ok = true;
    for (int k = i; k < n; ++k) {
      if (perm[k] == k) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

BigInt a_exact(int n) {
  if (n < 1) throw std::invalid_argument("a_exact: n must be positive");
  return factorial(static_cast<unsigned>(n + 1)) - derangements(n + 1) - derangements(n);
}

std::vector<BigInt> a_row_sums(int n_max) {
  const CountTriangle t(n_max);
  std::vector<BigInt> sums;
  sums.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) sums.push_back(t.row_sum(n));
  return sums;
}

ExactRho rho_ranking_monotone(int n) {
  if (n < 1) throw std::invalid_argument("rho: n must be positive");
  ExactRho result;
  result.n = n;
  result.a = a_exact(n);
  const BigInt nf = factorial(static_cast<unsigned>(n));
  result.rho = BigRat(result.a, nf);
  const Dec50 approx =
      constants::one_minus_inv_e() * n + constants::one_minus_two_inv_e();
  result.nu = to_dec50(result.rho) - approx;
  result.nu_bound = Dec50(1) / to_dec50(nf);
  return result;
}

Permutation bijection_b(const Permutation& pi, int i) {
  const int n = pi.n();
  if (i < 0 || i > n) throw std::invalid_argument("bijection: need 0 <= i <= n");
  std::vector<int> items = pi.items();
  if (i == n) {
    items.push_back(n);
  } else {
    items[pi.rank_of(i)] = n;
    items.push_back(i);
  }
  return Permutation::from_items(std::move(items));
}

std::pair<Permutation, int> bijection_b_inverse(const Permutation& pi_plus) {
  const int m = pi_plus.n();
  if (m < 2) throw std::invalid_argument("bijection inverse: need a permutation of at least 2");
  const int n = m - 1;
  std::vector<int> items(pi_plus.items().begin(), pi_plus.items().end() - 1);
  const int last = pi_plus.item_at(n);
  if (last == n) {
    return {Permutation::from_items(std::move(items)), n};
  }
  items[pi_plus.rank_of(n)] = last;
  return {Permutation::from_items(std::move(items)), last};
}

}  // namespace matchlab
