#include "symcc/sum_one.hpp"

#include <string>

#include "symcc/permstat.hpp"

namespace symcc {

ConstraintVector validate_sum_one(RawVector raw) {
  ConstraintVector a(std::move(raw));
  if (a.sum() != 1) {
    throw ValidationError("entries sum to " + std::to_string(a.sum()) +
                          ", not 1; use the general engine or the oracle");
  }
  return a;
}

GeneratorMatrixT1 generator_matrix_t1(const ConstraintVector& a) {
  if (a.sum() != 1) throw ValidationError("generator_matrix_t1 requires entries summing to 1");
  const std::size_t n = a.size();
  IntMatrix b(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::int64_t p = a.prefix(j);
      Integer& entry = b(i - 1, j - 1);
      if (j == n) {
        entry = 1;
      } else if (i > j) {
        entry = -p;
      } else {
        entry = 1 - p;
      }
    }
  }
  if (constraint_matrix(a) * b != IntMatrix::identity(n)) {
    throw std::logic_error("generator_matrix_t1: C*B != I");
  }
  return {std::move(b)};
}

FactoredGF gf_q_t1(const ConstraintVector& a) {
  if (a.sum() != 1) throw ValidationError("gf_q_t1 requires entries summing to 1");
  const auto n = static_cast<std::int64_t>(a.size());
  std::vector<std::int64_t> denoms{n};
  std::vector<LaurentPoly> weights;
  weights.reserve(a.size());
  for (std::int64_t j = 1; j < n; ++j) {
    const std::int64_t e = j - n * a.prefix(static_cast<std::size_t>(j));
    denoms.push_back(e);
    weights.push_back(q_power(e));
  }
  return {algorithm_g(static_cast<int>(n), weights), std::move(denoms)};
}

ExpVector permute_exponents(const std::vector<int>& pi, const ExpVector& b) {
  ExpVector out(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) out[static_cast<std::size_t>(pi[i] - 1)] = b[i];
  return out;
}

MultiGF gf_multi_t1(const ConstraintVector& a, std::size_t n_guard) {
  const std::size_t n = a.size();
  if (n > n_guard) {
    throw GuardExceeded("multivariate expansion has n! terms; n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(n_guard));
  }
  const GeneratorMatrixT1 gen = generator_matrix_t1(a);
  std::vector<ExpVector> columns(n, ExpVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) columns[j][i] = to_int64(gen.b(i, j));
  }

  MultiGF out(n);
  for_each_permutation(static_cast<int>(n), [&](const std::vector<int>& pi) {
    ExpVector num(n, 0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (pi[j] > pi[j + 1]) {
        for (std::size_t i = 0; i < n; ++i) num[i] += columns[j][i];
      }
    }
    MultiTerm term;
    term.numerator.emplace_back(permute_exponents(pi, num), 1);
    for (const auto& col : columns) term.denominators.push_back(permute_exponents(pi, col));
    out.add_term(std::move(term));
  });
  return out;
}

}  // namespace symcc
