#include "symcc/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "symcc/permstat.hpp"

namespace symcc {

void check_params(const ExampleParams& p) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("family " + std::to_string(p.family) + ": " + why);
  };
  switch (p.family) {
    case 1:
    case 3:
      if (p.n < 2) fail("n must be >= 2");
      if (p.b < 1) fail("b must be >= 1");
      break;
    case 2:
      if (p.n < 2) fail("n must be >= 2");
      if (p.b < 1) fail("b must be >= 1");
      if (p.n * p.b - 1 < 1) fail("nb - 1 must be >= 1");
      break;
    case 4:
      if (p.n < 3) fail("n must be >= 3");
      if (p.k < 1 || p.k > p.l) fail("need 1 <= k <= l");
      break;
    default:
      throw std::invalid_argument("unknown family " + std::to_string(p.family));
  }
}

ConstraintVector example_vector(const ExampleParams& p) {
  check_params(p);
  const auto n = static_cast<std::size_t>(p.n);
  RawVector a(n, 0);
  switch (p.family) {
    case 1:
      std::fill(a.begin(), a.end() - 1, -p.b);
      a.back() = p.n * p.b - p.b + 1;
      break;
    case 2:
      std::fill(a.begin() + 1, a.end(), p.b);
      a.front() = -(p.n * p.b - p.b - 1);
      break;
    case 3:
      a.front() = -p.b;
      a.back() = p.b + 1;
      break;
    default:
      a.front() = -p.m();
      a[n - 2] = p.k;
      a[n - 1] = p.l;
      break;
  }
  return ConstraintVector(std::move(a));
}

namespace {

FactoredGF power_family(std::int64_t n, std::int64_t e) {
  std::vector<std::int64_t> denoms{n};
  denoms.insert(denoms.end(), static_cast<std::size_t>(n), e);
  return {LaurentPoly(1) - q_power(n * e), std::move(denoms)};
}

}  // namespace

FactoredGF example1_gf(std::int64_t n, std::int64_t b) {
  check_params({.family = 1, .n = n, .b = b});
  return power_family(n, n * b + 1);
}

FactoredGF example2_gf(std::int64_t n, std::int64_t b) {
  check_params({.family = 2, .n = n, .b = b});
  return power_family(n, n * b - 1);
}

Series example3_carlitz_series(std::int64_t n, std::int64_t b, std::size_t order) {
  check_params({.family = 3, .n = n, .b = b});
  std::vector<std::int64_t> denoms{n};
  for (std::int64_t j = 1; j < n; ++j) denoms.push_back(j + b * n);
  return series_expand(FactoredGF(bipoly_substitute_x(carlitz(static_cast<int>(n)), b * n), denoms), order);
}

Series example3_gf(std::int64_t n, std::int64_t b, std::size_t order) {
  check_params({.family = 3, .n = n, .b = b});
  Series sum(order + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    if (i % 2 == 1) binom = -binom;
    Series term = series_of_poly(q_power(i, binom), order);
    series_divide_one_minus(term, b * n + i);
    for (std::size_t t = 0; t <= order; ++t) sum[t] += term[t];
  }
  const LaurentPoly prefactor = (LaurentPoly(1) - q_power(b * n)) * (LaurentPoly(1) - q_power(b * n + n));
  Series out = series_mul(series_of_poly(prefactor, order), sum, order);
  series_divide_one_minus(out, n);
  for (std::int64_t i = 0; i < n; ++i) series_divide_one_minus(out, 1);

  if (out != example3_carlitz_series(n, b, order)) {
    throw std::logic_error("example3_gf: closed form and Carlitz form disagree");
  }
  return out;
}

LaurentPoly example4_numerator(std::int64_t n, std::int64_t k, std::int64_t l) {
  const ExampleParams p{.family = 4, .n = n, .k = k, .l = l};
  check_params(p);
  const std::int64_t x = n * p.m();
  const LaurentPoly cn = bipoly_substitute_x(carlitz(static_cast<int>(n)), x);
  const LaurentPoly cn1 = bipoly_substitute_x(carlitz(static_cast<int>(n - 1)), x);
  return cn * (LaurentPoly(1) - q_power(n * l - 1)) -
         cn1 * q_power(x + n - 1, n) * (LaurentPoly(1) - q_power(-n * k));
}

std::vector<std::int64_t> example4_denominator(std::int64_t n, std::int64_t k, std::int64_t l) {
  const ExampleParams p{.family = 4, .n = n, .k = k, .l = l};
  check_params(p);
  std::vector<std::int64_t> denoms{n, n * l - 1};
  for (std::int64_t i = 0; i < n - 1; ++i) denoms.push_back(n * p.m() + 1 + i);
  return denoms;
}

Series example4_gf(std::int64_t n, std::int64_t k, std::int64_t l, std::size_t order) {
  return series_expand_laurent(FactoredGF(example4_numerator(n, k, l), example4_denominator(n, k, l)), order);
}

}  // namespace symcc
