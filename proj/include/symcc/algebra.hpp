#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcc {

using Integer = mpz_class;

/// Truncated power series: entry i is the coefficient of q^i.
using Series = std::vector<Integer>;

/// Raised when a polynomial division leaves a nonzero remainder.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent pair (x-degree, q-degree) of a bivariate monomial x^x q^q.
struct BiExponent {
  std::int64_t x = 0;
  std::int64_t q = 0;

  friend auto operator<=>(const BiExponent&, const BiExponent&) = default;
  friend BiExponent operator+(BiExponent a, BiExponent b) { return {a.x + b.x, a.q + b.q}; }
};

/**
 * Sparse polynomial with arbitrary-precision integer coefficients.
 *
 * Terms are kept sorted by ascending exponent with no zero coefficients, so
 * two polynomials are equal iff their term vectors are equal. The zero
 * polynomial has no terms.
 */
template <class Exponent>
class SparsePoly {
 public:
  using Term = std::pair<Exponent, Integer>;

  SparsePoly() = default;

  /// Constant polynomial.
  SparsePoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Exponent{}, Integer(c));
  }
  SparsePoly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Exponent{}, c);
  }

  /// Builds from unsorted terms; like exponents are combined.
  static SparsePoly from_terms(const std::vector<Term>& terms) {
    std::map<Exponent, Integer> acc;
    for (const auto& [e, c] : terms) acc[e] += c;
    return from_map(acc);
  }

  static SparsePoly monomial(Exponent e, const Integer& c = 1) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] Integer coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& key) { return t.first < key; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
  }

  /// Multiplies by c * (monomial with exponent e).
  [[nodiscard]] SparsePoly scaled(const Exponent& e, const Integer& c) const {
    SparsePoly out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [exp, coef] : terms_) out.terms_.emplace_back(exp + e, coef * c);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& r) {
    terms_ = merge(terms_, r.terms_, false);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& r) {
    terms_ = merge(terms_, r.terms_, true);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& r) { return *this = *this * r; }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return a.scaled(Exponent{}, -1); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
    if (b.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
    std::map<Exponent, Integer> acc;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    }
    return from_map(acc);
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) {
        return false;
      }
    }
    return true;
  }

 private:
  static SparsePoly from_map(const std::map<Exponent, Integer>& acc) {
    SparsePoly p;
    p.terms_.reserve(acc.size());
    for (const auto& [e, c] : acc) {
      if (c != 0) p.terms_.emplace_back(e, c);
    }
    return p;
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
        ++j;
      } else {
        Integer c = subtract ? Integer(a[i].second - b[j].second) : Integer(a[i].second + b[j].second);
        if (c != 0) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

/// Laurent polynomial in q (negative exponents allowed).
using LaurentPoly = SparsePoly<std::int64_t>;
/// Polynomial in x and q; x-degrees are nonnegative, q-degrees arbitrary.
using BiPoly = SparsePoly<BiExponent>;

/// Narrowing conversion; throws std::overflow_error if v does not fit.
std::int64_t to_int64(const Integer& v);

inline LaurentPoly q_power(std::int64_t e, const Integer& c = 1) { return LaurentPoly::monomial(e, c); }
inline BiPoly xq_power(std::int64_t x, std::int64_t q, const Integer& c = 1) {
  return BiPoly::monomial({x, q}, c);
}

/// Smallest / largest exponent; the polynomial must be nonzero.
std::int64_t min_exponent(const LaurentPoly& p);
std::int64_t max_exponent(const LaurentPoly& p);

/// Exact quotient p / d. Throws NonExactDivision if d does not divide p.
LaurentPoly poly_exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// [n]_q = 1 + q + ... + q^{n-1}.
LaurentPoly q_integer(std::int64_t n);

/// [n]_q! = prod_{i=1}^{n} (1 - q^i)/(1 - q), each factor obtained by exact division.
LaurentPoly q_factorial(std::int64_t n);

/// (x^{x_degree} q^k; q)_n = prod_{i=0}^{n-1} (1 - x^{x_degree} q^{k+i}).
BiPoly q_pochhammer(std::int64_t k, std::int64_t n, std::int64_t x_degree);

/// (q^k; q)_n as a Laurent polynomial.
LaurentPoly q_pochhammer_q(std::int64_t k, std::int64_t n);

/// Substitutes x -> q^k.
LaurentPoly bipoly_substitute_x(const BiPoly& p, std::int64_t k);

/// Embeds a Laurent polynomial as an x-free bivariate polynomial.
BiPoly to_bipoly(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p);
std::string to_string(const BiPoly& p);

/**
 * numerator / prod_j (1 - q^{e_j}), with the denominator kept factored.
 */
class FactoredGF {
 public:
  FactoredGF(LaurentPoly numerator, std::vector<std::int64_t> denom_exponents);

  [[nodiscard]] const LaurentPoly& numerator() const { return numerator_; }
  [[nodiscard]] const std::vector<std::int64_t>& denom_exponents() const { return denom_exponents_; }

  friend bool operator==(const FactoredGF&, const FactoredGF&) = default;

 private:
  LaurentPoly numerator_;
  std::vector<std::int64_t> denom_exponents_;
};

/// Coefficients of q^0..q^M. Rejects numerators with negative exponents.
Series series_expand(const FactoredGF& gf, std::size_t order);

/**
 * Same as series_expand, but a numerator with negative exponents is first
 * multiplied by q^{-min}; the expansion is then shifted back. Throws if the
 * shifted-out coefficients are not all zero (the quotient is not a power
 * series).
 */
Series series_expand_laurent(const FactoredGF& gf, std::size_t order);

/// Coefficients 0..order of a polynomial with nonnegative exponents.
Series series_of_poly(const LaurentPoly& p, std::size_t order);

/// Truncated product a * b mod q^{order+1}.
Series series_mul(const Series& a, const Series& b, std::size_t order);

/// In-place division of a truncated series by (1 - q^e), e >= 1.
void series_divide_one_minus(Series& s, std::int64_t e);

std::string to_string(const Series& s);

/// Monomial exponent vector z_1^{b_1} ... z_n^{b_n}.
using ExpVector = std::vector<std::int64_t>;

/// Multivariate truncated series keyed by exponent vector.
using MultiSeries = std::map<ExpVector, Integer>;

/// One summand: (sum of numerator monomials) / prod_j (1 - z^{denominators[j]}).
struct MultiTerm {
  std::vector<std::pair<ExpVector, Integer>> numerator;
  std::vector<ExpVector> denominators;
};

/// Sum of rational terms in z_1..z_n, each with exactly n denominator factors.
class MultiGF {
 public:
  explicit MultiGF(std::size_t dimension) : dimension_(dimension) {}

  void add_term(MultiTerm term);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] const std::vector<MultiTerm>& terms() const { return terms_; }

 private:
  std::size_t dimension_;
  std::vector<MultiTerm> terms_;
};

/// Expands every term to total degree <= max_degree and sums.
MultiSeries multi_series_expand(const MultiGF& gf, std::int64_t max_degree);

/// Expansion of a single rational term; denominator vectors must have positive total degree.
MultiSeries multi_series_expand(const MultiTerm& term, std::int64_t max_degree);

/// Specializes z_1 = ... = z_n = q by collecting total degrees 0..max_degree.
Series collapse_total_degree(const MultiSeries& s, std::int64_t max_degree);

}  // namespace symcc
