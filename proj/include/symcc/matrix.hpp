#pragma once

#include <cstddef>
#include <vector>

#include "symcc/algebra.hpp"

namespace symcc {

/// Dense square-or-rectangular matrix over the integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from row lists; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<Integer> column(std::size_t c) const;
  [[nodiscard]] Integer column_sum(std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Matrix-vector product.
std::vector<Integer> multiply(const IntMatrix& a, const std::vector<Integer>& v);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Classical adjugate: adj(A) * A = det(A) * I. Entries are Bareiss cofactors.
IntMatrix adjugate(const IntMatrix& a);

/**
 * Column Hermite normal form of a nonsingular matrix: H = A*U with U
 * unimodular, H lower triangular with positive diagonal. The box
 * 0 <= r_i < H(i,i) is then a complete set of coset representatives of
 * Z^n / A Z^n.
 */
IntMatrix hermite_lower(const IntMatrix& a);

}  // namespace symcc
