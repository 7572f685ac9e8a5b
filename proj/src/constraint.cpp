#include "symcc/constraint.hpp"

#include <algorithm>

namespace symcc {

ConstraintVector::ConstraintVector(RawVector raw) : a_(std::move(raw)) {
  if (a_.empty()) throw ValidationError("constraint vector must have at least one entry");
  std::sort(a_.begin(), a_.end());
  prefix_.resize(a_.size());
  std::int64_t run = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    run += a_[i];
    prefix_[i] = run;
  }
}

IntMatrix constraint_matrix(const ConstraintVector& a) {
  const std::size_t n = a.size();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c(i, i) = 1;
    c(i, i + 1) = -1;
  }
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = a.values()[j];
  return c;
}

}  // namespace symcc
