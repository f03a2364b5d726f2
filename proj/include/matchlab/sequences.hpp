#pragma once

#include <utility>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

// d(0) = 1, then Euler's recurrence d(n) = n*d(n-1) + (-1)^n.
BigInt derangements(int n);

// Triangular table rows[n][i] = d(n, i) for 1 <= i <= n: the number of
// permutations of [n] whose fixpoints (if any) all lie among the first i
// items. Filled from the diagonal d(n, n) = n! by d(n, i) = d(n, i+1) - d(n-1, i).
class CountTriangle {
 public:
  explicit CountTriangle(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()); }
  // 1-based: at(n, i) = d(n, i), valid for 1 <= i <= n <= n_max.
  const BigInt& at(int n, int i) const { return rows_[n - 1][i - 1]; }
  const std::vector<BigInt>& row(int n) const { return rows_[n - 1]; }
  BigInt row_sum(int n) const;

  std::vector<BigInt>& mutable_row(int n) { return rows_[n - 1]; }  // for fault-injection tests

 private:
  std::vector<std::vector<BigInt>> rows_;
};

CountTriangle d_triangle(int n_max);

// Literal enumeration over all n! permutations counting those whose fixpoints
// all lie among the first i items; independent oracle for d_triangle. n <= 8.
BigInt fixpoint_prefix_count_bruteforce(int n, int i);

// a(n) = (n+1)! - d(n+1) - d(n): total matching size over all n! rankings of
// the size-n monotone graph.
BigInt a_exact(int n);

// Row sums of the d-triangle; a_row_sums(m)[n-1] must equal a_exact(n).
std::vector<BigInt> a_row_sums(int n_max);

// Exact expected matching size of rank-greedy matching on the monotone graph,
// with its deviation from the linear approximation (1 - 1/e)n + 1 - 2/e.
struct ExactRho {
  int n = 0;
  BigInt a;
  BigRat rho;        // a / n!
  Dec50 nu;          // rho - ((1 - 1/e) n + 1 - 2/e), 50-digit evaluation
  Dec50 nu_bound;    // 1 / n!
};

ExactRho rho_ranking_monotone(int n);

// Rank-insertion bijection between (permutations of n, choice of i in 0..n)
// and permutations of n+1:
//   i == n: append vertex n at the last rank;
//   i <  n: vertex n takes the rank vertex i held, vertex i moves to rank n.
Permutation bijection_b(const Permutation& pi, int i);
std::pair<Permutation, int> bijection_b_inverse(const Permutation& pi_plus);

}  // namespace matchlab
