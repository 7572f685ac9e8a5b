#pragma once

#include <cstddef>
#include <cstdint>

#include "symcc/algebra.hpp"
#include "symcc/constraint.hpp"

namespace symcc {

/**
 * Parameters of the four reference families. All four vectors sum to 1.
 *
 *   1: [-b, ..., -b, nb-b+1]         (n >= 2, b >= 1)
 *   2: [-(nb-b-1), b, ..., b]         (n >= 2, b >= 1, nb-1 >= 1)
 *   3: [-b, 0, ..., 0, b+1]           (n >= 2, b >= 1)
 *   4: [-m, 0, ..., 0, k, l]          (n >= 3, 1 <= k <= l, m = k+l-1)
 */
struct ExampleParams {
  int family = 1;
  std::int64_t n = 2;
  std::int64_t b = 1;
  std::int64_t k = 1;
  std::int64_t l = 1;

  [[nodiscard]] std::int64_t m() const { return k + l - 1; }
};

/// Throws std::invalid_argument for parameters outside the family's range.
void check_params(const ExampleParams& p);

ConstraintVector example_vector(const ExampleParams& p);

/// (1 - q^{n(nb+1)}) / ((1 - q^n)(1 - q^{nb+1})^n)
FactoredGF example1_gf(std::int64_t n, std::int64_t b);

/// (1 - q^{n(nb-1)}) / ((1 - q^n)(1 - q^{nb-1})^n)
FactoredGF example2_gf(std::int64_t n, std::int64_t b);

/**
 * Family 3 as a truncated series:
 *
 *   (1-q^{bn})(1-q^{bn+n}) / ((1-q^n)(1-q)^n) * sum_{i=0}^{n} C(n,i) (-q)^i / (1-q^{bn+i})
 *
 * The result is cross-checked against example3_carlitz_series and a
 * std::logic_error is thrown if the two disagree.
 */
Series example3_gf(std::int64_t n, std::int64_t b, std::size_t order);

/// C_n(q^{bn}, q) / ((1-q^n) prod_{j=1}^{n-1} (1-q^{j+bn})), via Carlitz substitution.
Series example3_carlitz_series(std::int64_t n, std::int64_t b, std::size_t order);

/**
 * Laurent numerator of family 4:
 *   C_n(q^{nm},q)(1-q^{nl-1}) - C_{n-1}(q^{nm},q) n q^{nm+n-1} (1-q^{-nk})
 */
LaurentPoly example4_numerator(std::int64_t n, std::int64_t k, std::int64_t l);

/// Denominator exponents of family 4: n, nl-1, then nm+1 .. nm+n-1.
std::vector<std::int64_t> example4_denominator(std::int64_t n, std::int64_t k, std::int64_t l);

/// Family 4 as a truncated series of example4_numerator / example4_denominator.
Series example4_gf(std::int64_t n, std::int64_t k, std::int64_t l, std::size_t order);

}  // namespace symcc
