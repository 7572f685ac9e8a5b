#include "symcc/general.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "symcc/permstat.hpp"
#include "symcc/sum_one.hpp"

namespace symcc {

ConstraintVector validate_general(RawVector raw) {
  ConstraintVector a(std::move(raw));
  if (a.sum() < 1) {
    throw ValidationError("entries sum to " + std::to_string(a.sum()) + "; need a sum >= 1");
  }
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a.prefix(j) > 0) {
      throw ValidationError("prefix sum a_1+...+a_" + std::to_string(j) + " = " + std::to_string(a.prefix(j)) +
                            " is positive; only the oracle applies");
    }
  }
  return a;
}

GeneratorMatrixT2 generator_matrix_t2(const ConstraintVector& a, bool reduce) {
  const std::size_t n = a.size();
  const std::int64_t s = a.sum();
  if (s < 1) throw ValidationError("generator_matrix_t2 requires sum >= 1");

  IntMatrix m(n, n);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      Integer& entry = m(i - 1, j - 1);
      if (j == n) {
        entry = 1;
      } else if (i <= j) {
        entry = s - a.prefix(j);
      } else {
        entry = -a.prefix(j);
      }
    }
  }

  IntMatrix scaled_identity = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) scaled_identity(i, i) = s;
  if (constraint_matrix(a) * m != scaled_identity) throw std::logic_error("generator_matrix_t2: C*A != s*I");

  Integer det;
  mpz_ui_pow_ui(det.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(n - 1));

  std::vector<Integer> divisors(n, 1);
  if (reduce) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer g = 0;
      for (std::size_t i = 0; i < n; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
      if (g > 1) {
        for (std::size_t i = 0; i < n; ++i) mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(det.get_mpz_t(), det.get_mpz_t(), g.get_mpz_t());
        divisors[j] = g;
      }
    }
  }
  return {std::move(m), std::move(divisors), std::move(det)};
}

bool in_parallelepiped(const IntMatrix& adj, const Integer& det, const ExpVector& p) {
  std::vector<Integer> v(p.begin(), p.end());
  for (const auto& c : multiply(adj, v)) {
    if (c < 0 || c >= det) return false;
  }
  return true;
}

Parallelepiped parallelepiped_points(const GeneratorMatrixT2& gen, std::size_t point_cap) {
  const IntMatrix& a = gen.a;
  const std::size_t n = a.rows();
  if (gen.det < 1) throw std::invalid_argument("parallelepiped_points: det(A) must be >= 1");
  if (gen.det > point_cap) {
    throw GuardExceeded("parallelepiped has " + gen.det.get_str() + " lattice points; cap is " +
                        std::to_string(point_cap));
  }
  if (determinant(a) != gen.det) throw std::logic_error("parallelepiped_points: recorded det(A) is stale");

  const IntMatrix adj = adjugate(a);
  const IntMatrix h = hermite_lower(a);
  std::vector<Integer> radix(n);
  for (std::size_t i = 0; i < n; ++i) radix[i] = h(i, i);

  std::vector<ExpVector> points;
  points.reserve(gen.det.get_ui());
  std::vector<Integer> r(n, 0);
  std::vector<Integer> floors(n);
  for (;;) {
    const std::vector<Integer> k = multiply(adj, r);
    for (std::size_t i = 0; i < n; ++i) mpz_fdiv_q(floors[i].get_mpz_t(), k[i].get_mpz_t(), gen.det.get_mpz_t());
    const std::vector<Integer> shift = multiply(a, floors);
    ExpVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = to_int64(r[i] - shift[i]);
    points.push_back(std::move(p));

    std::size_t i = 0;
    while (i < n) {
      if (++r[i] < radix[i]) break;
      r[i] = 0;
      ++i;
    }
    if (i == n) break;
  }

  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end() || points.size() != gen.det) {
    throw std::logic_error("parallelepiped_points: enumeration does not match det(A)");
  }
  return {std::move(points), gen};
}

namespace {

std::vector<std::int64_t> column_sums(const IntMatrix& a) {
  std::vector<std::int64_t> out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out[j] = to_int64(a.column_sum(j));
  return out;
}

}  // namespace

FactoredGF gf_q_general(const Parallelepiped& cell) {
  const IntMatrix& a = cell.matrix.a;
  const std::size_t n = a.rows();
  const std::vector<std::int64_t> sums = column_sums(a);

  // G depends on p only through which neighbouring coordinates are equal.
  std::map<std::vector<bool>, LaurentPoly> by_pattern;
  LaurentPoly numerator;
  for (const auto& p : cell.points) {
    std::vector<bool> ties(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) ties[i] = p[i] == p[i + 1];
    auto it = by_pattern.find(ties);
    if (it == by_pattern.end()) {
      std::vector<LaurentPoly> weights;
      weights.reserve(ties.size());
      for (std::size_t i = 0; i < ties.size(); ++i) weights.push_back(ties[i] ? q_power(sums[i]) : LaurentPoly(1));
      it = by_pattern.emplace(ties, algorithm_g(static_cast<int>(n), weights)).first;
    }
    std::int64_t weight = 0;
    for (auto c : p) weight += c;
    numerator += it->second * q_power(weight);
  }
  return {std::move(numerator), sums};
}

FactoredGF gf_q_general(const ConstraintVector& a, bool reduce, std::size_t point_cap) {
  return gf_q_general(parallelepiped_points(generator_matrix_t2(a, reduce), point_cap));
}

MultiGF gf_multi_general(const ConstraintVector& a, std::size_t n_guard, bool reduce, std::size_t point_cap) {
  const std::size_t n = a.size();
  if (n > n_guard) {
    throw GuardExceeded("multivariate expansion has n! terms; n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(n_guard));
  }
  const Parallelepiped cell = parallelepiped_points(generator_matrix_t2(a, reduce), point_cap);
  std::vector<ExpVector> columns(n, ExpVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) columns[j][i] = to_int64(cell.matrix.a(i, j));
  }

  MultiGF out(n);
  for_each_permutation(static_cast<int>(n), [&](const std::vector<int>& pi) {
    std::map<ExpVector, Integer> numerator;
    for (const auto& p : cell.points) {
      ExpVector mono = p;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (pi[i] > pi[i + 1] && p[i] == p[i + 1]) {
          for (std::size_t r = 0; r < n; ++r) mono[r] += columns[i][r];
        }
      }
      numerator[permute_exponents(pi, mono)] += 1;
    }
    MultiTerm term;
    term.numerator.assign(numerator.begin(), numerator.end());
    for (const auto& col : columns) term.denominators.push_back(permute_exponents(pi, col));
    out.add_term(std::move(term));
  });
  return out;
}

}  // namespace symcc
