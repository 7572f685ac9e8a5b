#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "symcc/matrix.hpp"

namespace symcc {

/// An input vector rejected by an engine's hypotheses.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a configured size guard would be exceeded.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

using RawVector = std::vector<std::int64_t>;

/**
 * Coefficients a_1 <= ... <= a_n of the symmetric constraint
 * sum_i a_i lambda_{pi(i)} >= 0, with prefix sums.
 *
 * Sorting loses nothing: the constraint set is invariant under permuting a.
 */
class ConstraintVector {
 public:
  /// Sorts ascending. Throws ValidationError on an empty vector.
  explicit ConstraintVector(RawVector raw);

  [[nodiscard]] std::size_t size() const { return a_.size(); }
  [[nodiscard]] const RawVector& values() const { return a_; }
  /// a_j for 1-based j.
  [[nodiscard]] std::int64_t a(std::size_t j) const { return a_[j - 1]; }
  /// a_1 + ... + a_j for 1-based j (prefix(0) = 0).
  [[nodiscard]] std::int64_t prefix(std::size_t j) const { return j == 0 ? 0 : prefix_[j - 1]; }
  [[nodiscard]] std::int64_t sum() const { return prefix_.back(); }

 private:
  RawVector a_;
  RawVector prefix_;
};

/**
 * Matrix of the ordered system: rows e_i - e_{i+1} for i < n, last row a.
 * Its inverse, scaled by sum(a), is the generator matrix of both engines.
 */
IntMatrix constraint_matrix(const ConstraintVector& a);

}  // namespace symcc
