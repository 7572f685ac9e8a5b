#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "symcc/algebra.hpp"

namespace symcc {

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless one_line is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  [[nodiscard]] int size() const { return static_cast<int>(one_line_.size()); }
  /// pi(i) for 1-based i.
  [[nodiscard]] int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] const std::vector<int>& one_line() const { return one_line_; }

 private:
  std::vector<int> one_line_;
};

struct DescentStats {
  std::vector<int> descent_set;  // ascending, 1-based positions j with pi(j) > pi(j+1)
  int des = 0;
  int maj = 0;
};

DescentStats descent_stats(const Permutation& pi);

/// Calls f(one_line) for every permutation of {1..n} in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  do {
    f(static_cast<const std::vector<int>&>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

/// Largest n accepted by the enumeration-based functions below.
inline constexpr int kMaxEnumerationOrder = 10;

/// sum over S_n of q^maj.
LaurentPoly maj_distribution(int n);

/// Carlitz q-Eulerian polynomial: sum over S_n of x^des q^maj, by direct enumeration.
BiPoly carlitz(int n);

/// Same sum restricted to permutations with no descent at positions n-i .. n-1.
BiPoly carlitz_nodesc(int n, int i);

/**
 * Memo table of the descent-weight recurrence.
 *
 * Entry (k, i) holds the sum over permutations of {1..k} ending in i of the
 * product of u_j over their descent positions j. Row k is built from row
 * k-1 via
 *
 *   G(k, 1) = u_{k-1} * sum_j G(k-1, j)
 *   G(k, i) = G(k, i-1) + (1 - u_{k-1}) * G(k-1, i-1)
 *
 * starting from G(1, 1) = 1. The table owns its storage; nothing is shared
 * between instances.
 */
class DescentWeightTable {
 public:
  /// Builds rows 1..weights.size()+1; weights[j-1] is u_j.
  explicit DescentWeightTable(std::span<const LaurentPoly> weights);

  [[nodiscard]] int rows() const { return static_cast<int>(rows_.size()); }
  /// G(k, i) for 1 <= i <= k <= rows().
  [[nodiscard]] const LaurentPoly& at(int k, int i) const;
  /// Number of stored polynomials.
  [[nodiscard]] std::size_t entries() const;

 private:
  std::vector<std::vector<LaurentPoly>> rows_;
};

/**
 * Sum over S_n of the product of u_j over descent positions j.
 *
 * weights must hold u_1..u_{n-1}. The value is read off as G(n+1, n+1);
 * the weight u_n that the final row formally needs never reaches that
 * entry, so it is fixed to 1.
 */
LaurentPoly algorithm_g(int n, std::span<const LaurentPoly> weights);

/// Direct n!-term evaluation of the same sum (reference only).
LaurentPoly descent_weight_sum_direct(int n, std::span<const LaurentPoly> weights);

}  // namespace symcc
