#pragma once

#include <cstddef>

#include "symcc/algebra.hpp"
#include "symcc/constraint.hpp"
#include "symcc/matrix.hpp"

namespace symcc {

/// Sorts and accepts iff the entries sum to exactly 1.
ConstraintVector validate_sum_one(RawVector raw);

/// Inverse of the constraint matrix when sum(a) = 1; nonnegative, last column all ones.
struct GeneratorMatrixT1 {
  IntMatrix b;
};

/// Builds B column by column and checks C*B = I.
GeneratorMatrixT1 generator_matrix_t1(const ConstraintVector& a);

/// Default guard on n for the n!-term multivariate expansion.
inline constexpr std::size_t kDefaultMultiGuardT1 = 8;

/**
 * F(q) for a sum-one vector: denominator exponents n, then j - n*prefix_j
 * for j = 1..n-1; numerator from the descent-weight recurrence with
 * u_j = q^{j - n*prefix_j}.
 */
FactoredGF gf_q_t1(const ConstraintVector& a);

/// F(z_1..z_n) as one rational term per permutation of S_n.
MultiGF gf_multi_t1(const ConstraintVector& a, std::size_t n_guard = kDefaultMultiGuardT1);

/// Exponent vector z_pi^b: coordinate i of b lands on variable pi(i).
ExpVector permute_exponents(const std::vector<int>& pi, const ExpVector& b);

}  // namespace symcc
