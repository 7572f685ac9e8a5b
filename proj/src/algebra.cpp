#include "symcc/algebra.hpp"

#include <numeric>
#include <sstream>

namespace symcc {

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer " + v.get_str() + " does not fit in 64 bits");
  return v.get_si();
}

std::int64_t min_exponent(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("min_exponent of the zero polynomial");
  return p.terms().front().first;
}

std::int64_t max_exponent(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("max_exponent of the zero polynomial");
  return p.terms().back().first;
}

LaurentPoly poly_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_zero()) return {};

  // A Laurent quotient, if one exists, lives in [lowest, highest].
  const auto [d_hi, d_lead] = d.terms().back();
  const std::int64_t lowest = min_exponent(p) - min_exponent(d);
  const std::int64_t highest = max_exponent(p) - d_hi;

  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [r_hi, r_lead] = rem.terms().back();
    const std::int64_t e = r_hi - d_hi;
    if (e < lowest || e > highest || !mpz_divisible_p(r_lead.get_mpz_t(), d_lead.get_mpz_t())) {
      throw NonExactDivision("polynomial division leaves a nonzero remainder: (" + to_string(p) +
                             ") / (" + to_string(d) + ")");
    }
    Integer c = r_lead / d_lead;
    rem -= d.scaled(e, c);
    quotient.emplace_back(e, std::move(c));
  }
  return LaurentPoly::from_terms(quotient);
}

LaurentPoly q_integer(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("q_integer: n must be nonnegative");
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t i = 0; i < n; ++i) terms.emplace_back(i, 1);
  return LaurentPoly::from_terms(terms);
}

LaurentPoly q_factorial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("q_factorial: n must be positive");
  const LaurentPoly one_minus_q = LaurentPoly(1) - q_power(1);
  LaurentPoly out = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    out *= poly_exact_div(LaurentPoly(1) - q_power(i), one_minus_q);
  }
  return out;
}

BiPoly q_pochhammer(std::int64_t k, std::int64_t n, std::int64_t x_degree) {
  if (n < 0 || x_degree < 0) throw std::invalid_argument("q_pochhammer: negative length or x-degree");
  BiPoly out = 1;
  for (std::int64_t i = 0; i < n; ++i) out *= BiPoly(1) - xq_power(x_degree, k + i);
  return out;
}

LaurentPoly q_pochhammer_q(std::int64_t k, std::int64_t n) {
  return bipoly_substitute_x(q_pochhammer(k, n, 0), 0);
}

LaurentPoly bipoly_substitute_x(const BiPoly& p, std::int64_t k) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e.x * k + e.q, c);
  return LaurentPoly::from_terms(terms);
}

BiPoly to_bipoly(const LaurentPoly& p) {
  std::vector<BiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(BiExponent{0, e}, c);
  return BiPoly::from_terms(terms);
}

namespace {

void append_term(std::ostringstream& os, bool first, const Integer& c, const std::string& mono) {
  Integer mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag << "*";
    os << mono;
  }
}

std::string power(const char* var, std::int64_t e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term(os, first, c, power("q", e));
    first = false;
  }
  return os.str();
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = power("x", e.x);
    std::string qpart = power("q", e.q);
    if (!mono.empty() && !qpart.empty()) mono += "*";
    mono += qpart;
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

FactoredGF::FactoredGF(LaurentPoly numerator, std::vector<std::int64_t> denom_exponents)
    : numerator_(std::move(numerator)), denom_exponents_(std::move(denom_exponents)) {
  for (auto e : denom_exponents_) {
    if (e < 1) throw std::invalid_argument("denominator exponent must be >= 1, got " + std::to_string(e));
  }
}

Series series_of_poly(const LaurentPoly& p, std::size_t order) {
  Series out(order + 1);
  for (const auto& [e, c] : p.terms()) {
    if (e < 0) throw std::domain_error("series_of_poly: negative exponent " + std::to_string(e));
    if (static_cast<std::size_t>(e) <= order) out[static_cast<std::size_t>(e)] += c;
  }
  return out;
}

void series_divide_one_minus(Series& s, std::int64_t e) {
  if (e < 1) throw std::invalid_argument("series_divide_one_minus: exponent must be >= 1");
  const auto step = static_cast<std::size_t>(e);
  for (std::size_t i = step; i < s.size(); ++i) s[i] += s[i - step];
}

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_expand(const FactoredGF& gf, std::size_t order) {
  if (!gf.numerator().is_zero() && min_exponent(gf.numerator()) < 0) {
    throw std::domain_error("series_expand: numerator has negative exponent " +
                            std::to_string(min_exponent(gf.numerator())) + "; normalize first");
  }
  Series out = series_of_poly(gf.numerator(), order);
  for (auto e : gf.denom_exponents()) series_divide_one_minus(out, e);
  return out;
}

Series series_expand_laurent(const FactoredGF& gf, std::size_t order) {
  if (gf.numerator().is_zero() || min_exponent(gf.numerator()) >= 0) return series_expand(gf, order);
  const auto shift = static_cast<std::size_t>(-min_exponent(gf.numerator()));
  FactoredGF normalized(gf.numerator() * q_power(static_cast<std::int64_t>(shift)), gf.denom_exponents());
  Series wide = series_expand(normalized, order + shift);
  for (std::size_t i = 0; i < shift; ++i) {
    if (wide[i] != 0) {
      throw std::domain_error("series_expand_laurent: quotient has a nonzero q^" +
                              std::to_string(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(shift)) +
                              " term");
    }
  }
  return Series(wide.begin() + static_cast<std::ptrdiff_t>(shift), wide.end());
}

std::string to_string(const Series& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

void MultiGF::add_term(MultiTerm term) {
  if (term.denominators.size() != dimension_) {
    throw std::invalid_argument("MultiGF term needs exactly " + std::to_string(dimension_) +
                                " denominator vectors");
  }
  auto check = [this](const ExpVector& v) {
    if (v.size() != dimension_) throw std::invalid_argument("MultiGF exponent vector has wrong length");
    for (auto e : v) {
      if (e < 0) throw std::invalid_argument("MultiGF exponent entries must be nonnegative");
    }
  };
  for (const auto& [v, c] : term.numerator) check(v);
  for (const auto& v : term.denominators) check(v);
  terms_.push_back(std::move(term));
}

namespace {

std::int64_t total_degree(const ExpVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

MultiSeries multi_series_expand(const MultiTerm& term, std::int64_t max_degree) {
  MultiSeries acc;
  for (const auto& [v, c] : term.numerator) {
    if (total_degree(v) <= max_degree) acc[v] += c;
  }
  for (const auto& den : term.denominators) {
    const std::int64_t step = total_degree(den);
    if (step <= 0) throw std::domain_error("denominator monomial must have positive total degree");
    MultiSeries next;
    for (const auto& [v, c] : acc) {
      ExpVector m = v;
      for (std::int64_t deg = total_degree(v); deg <= max_degree; deg += step) {
        next[m] += c;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += den[i];
      }
    }
    acc = std::move(next);
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

MultiSeries multi_series_expand(const MultiGF& gf, std::int64_t max_degree) {
  MultiSeries acc;
  for (const auto& term : gf.terms()) {
    for (auto& [v, c] : multi_series_expand(term, max_degree)) acc[v] += c;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

Series collapse_total_degree(const MultiSeries& s, std::int64_t max_degree) {
  Series out(static_cast<std::size_t>(max_degree + 1));
  for (const auto& [v, c] : s) {
    const auto d = total_degree(v);
    if (d <= max_degree) out[static_cast<std::size_t>(d)] += c;
  }
  return out;
}

}  // namespace symcc
