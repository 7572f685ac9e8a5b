#pragma once

#include <cstddef>
#include <vector>

#include "symcc/algebra.hpp"
#include "symcc/constraint.hpp"
#include "symcc/matrix.hpp"

namespace symcc {

/// Sorts and accepts iff sum(a) >= 1 and every proper prefix sum is <= 0.
ConstraintVector validate_general(RawVector raw);

/**
 * Cone generators as the columns of A. Before reduction C*A = s*I and
 * det(A) = s^{n-1}; column j < n holds the suffix sum a_{j+1}+...+a_n in
 * rows 1..j and -prefix_j below, column n is all ones.
 */
struct GeneratorMatrixT2 {
  IntMatrix a;
  std::vector<Integer> column_divisors;  // all 1 when unreduced
  Integer det;
};

/// Builds A; with reduce, divides each column by the gcd of its entries.
GeneratorMatrixT2 generator_matrix_t2(const ConstraintVector& a, bool reduce);

/// Integer points of the half-open parallelepiped spanned by the columns of A.
struct Parallelepiped {
  std::vector<ExpVector> points;
  GeneratorMatrixT2 matrix;
};

/// Default cap on det(A), i.e. on the number of lattice points.
inline constexpr std::size_t kDefaultLatticePointCap = 1'000'000;

/**
 * Enumerates P = sum_j [0,1) A_j intersected with Z^n.
 *
 * Each coset of Z^n / A Z^n is represented once by a point of the Hermite
 * box, then reduced into P by subtracting A * floor(A^{-1} r). The result
 * is sorted lexicographically and has exactly det(A) points.
 */
Parallelepiped parallelepiped_points(const GeneratorMatrixT2& gen,
                                     std::size_t point_cap = kDefaultLatticePointCap);

/// True iff 0 <= (adj(A) p)_i < det(A) for all i.
bool in_parallelepiped(const IntMatrix& adj, const Integer& det, const ExpVector& p);

/**
 * F(q) = sum over p in P of q^{|p|} G(u^{(p)}) / prod_j (1 - q^{|A_j|}),
 * with u^{(p)}_i = q^{|A_i|} when p_i = p_{i+1} and 1 otherwise.
 */
FactoredGF gf_q_general(const Parallelepiped& cell);
FactoredGF gf_q_general(const ConstraintVector& a, bool reduce = true,
                        std::size_t point_cap = kDefaultLatticePointCap);

inline constexpr std::size_t kDefaultMultiGuardT2 = 6;

/// F(z_1..z_n) with one term per permutation; the numerator sums over P.
MultiGF gf_multi_general(const ConstraintVector& a, std::size_t n_guard = kDefaultMultiGuardT2,
                         bool reduce = true, std::size_t point_cap = kDefaultLatticePointCap);

}  // namespace symcc
