#include "symcc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace symcc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Integer IntMatrix::column_sum(std::size_t c) const {
  Integer s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<Integer> multiply(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = a(i, j);
        }
        ++mi;
      }
      Integer cof = determinant(minor);
      if ((r + c) % 2 == 1) cof = -cof;
      adj(c, r) = cof;
    }
  }
  return adj;
}

IntMatrix hermite_lower(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermite_lower of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix h = a;
  auto combine = [&](std::size_t ci, std::size_t cj, const Integer& x, const Integer& y, const Integer& z,
                     const Integer& w) {
    // (col_i, col_j) <- (x*col_i + y*col_j, z*col_i + w*col_j)
    for (std::size_t r = 0; r < n; ++r) {
      Integer vi = h(r, ci);
      Integer vj = h(r, cj);
      h(r, ci) = x * vi + y * vj;
      h(r, cj) = z * vi + w * vj;
    }
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      if (h(r, c) == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(r, r).get_mpz_t(), h(r, c).get_mpz_t());
      Integer alpha = h(r, r) / g;
      Integer beta = h(r, c) / g;
      // det [[x, -beta], [y, alpha]] = x*alpha + y*beta = 1
      combine(r, c, x, y, -beta, alpha);
    }
    if (h(r, r) == 0) throw std::domain_error("hermite_lower: singular matrix");
    if (h(r, r) < 0) {
      for (std::size_t i = 0; i < n; ++i) h(i, r) = -h(i, r);
    }
  }
  return h;
}

}  // namespace symcc
