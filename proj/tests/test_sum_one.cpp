#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "symcc/oracle.hpp"
#include "symcc/sum_one.hpp"
#include "test_support.hpp"

using namespace symcc;
using symcc::testing::ints;
using symcc::testing::poly;

namespace {

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("validate_sum_one examples") {
  const ConstraintVector a = validate_sum_one({1, -1, 1});
  CHECK(a.values() == RawVector{-1, 1, 1});
  CHECK(a.sum() == 1);
  CHECK(a.prefix(1) == -1);
  CHECK(a.prefix(2) == 0);
  CHECK_THROWS_AS(validate_sum_one({-1, 3}), ValidationError);
  CHECK(validate_sum_one({1}).size() == 1);
  CHECK_THROWS_AS(validate_sum_one({}), ValidationError);
}

TEST_CASE("generator_matrix_t1 examples") {
  CHECK(generator_matrix_t1(validate_sum_one({-1, 1, 1})).b == IntMatrix{{2, 1, 1}, {1, 1, 1}, {1, 0, 1}});
  CHECK(generator_matrix_t1(validate_sum_one({-1, 2})).b == IntMatrix{{2, 1}, {1, 1}});
  CHECK(generator_matrix_t1(validate_sum_one({1})).b == IntMatrix{{1}});
}

TEST_CASE("generator_matrix_t1 is a nonnegative inverse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const ConstraintVector a(testing::random_vector_with_sum(rng, n, -6, 6, 1));
    const IntMatrix b = generator_matrix_t1(a).b;
    CHECK(constraint_matrix(a) * b == IntMatrix::identity(n));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(b(i, n - 1) == 1);
      for (std::size_t j = 0; j < n; ++j) CHECK(b(i, j) >= 0);
    }
  }
}

TEST_CASE("gf_q_t1 examples") {
  const FactoredGF tri = gf_q_t1(validate_sum_one({-1, 1, 1}));
  CHECK(tri.numerator() == poly({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
  CHECK(sorted(tri.denom_exponents()) == std::vector<std::int64_t>{2, 3, 4});

  const FactoredGF putnam = gf_q_t1(validate_sum_one({-1, 2}));
  CHECK(putnam.numerator() == poly({{0, 1}, {3, 1}}));
  CHECK(sorted(putnam.denom_exponents()) == std::vector<std::int64_t>{2, 3});
  // (1 + q^2 + q^4) / ((1 - q^3)^2) at x = y = q
  CHECK(series_expand(putnam, 30) ==
        series_expand(FactoredGF(poly({{0, 1}, {2, 1}, {4, 1}}), {3, 3}), 30));

  const FactoredGF one = gf_q_t1(validate_sum_one({1}));
  CHECK(one.numerator() == LaurentPoly(1));
  CHECK(one.denom_exponents() == std::vector<std::int64_t>{1});
}

TEST_CASE("gf_q_t1 agrees with the oracle on random vectors") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    const RawVector v = testing::random_vector_with_sum(rng, n, -5, 5, 1);
    CAPTURE(v);
    CHECK(series_expand(gf_q_t1(ConstraintVector(v)), 12) == oracle::count_by_weight(v, 12));
  }
}

TEST_CASE("gf_multi_t1 reproduces the Putnam parametrization") {
  const MultiGF gf = gf_multi_t1(validate_sum_one({-1, 2}));
  CHECK(gf.terms().size() == 2);
  MultiTerm closed;
  closed.numerator = {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}};
  closed.denominators = {{1, 2}, {2, 1}};
  CHECK(multi_series_expand(gf, 12) == multi_series_expand(closed, 12));
}

TEST_CASE("gf_multi_t1 small cases") {
  const MultiGF one = gf_multi_t1(validate_sum_one({1}));
  REQUIRE(one.terms().size() == 1);
  CHECK(one.terms()[0].denominators == std::vector<ExpVector>{{1}});
  CHECK(one.terms()[0].numerator.size() == 1);

  const RawVector tri{-1, 1, 1};
  const MultiGF gf = gf_multi_t1(validate_sum_one(tri));
  CHECK(gf.terms().size() == 6);
  CHECK(multi_series_expand(gf, 6) == oracle::valid_indicator(tri, 6));
}

TEST_CASE("gf_multi_t1 specializes to gf_q_t1") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    const ConstraintVector a(testing::random_vector_with_sum(rng, n, -4, 4, 1));
    const std::int64_t m = 10;
    CHECK(collapse_total_degree(multi_series_expand(gf_multi_t1(a), m), m) ==
          series_expand(gf_q_t1(a), static_cast<std::size_t>(m)));
  }
}

TEST_CASE("gf_multi_t1 respects its guard") {
  CHECK_THROWS_AS(gf_multi_t1(validate_sum_one({-1, 0, 0, 1, 1}), 4), GuardExceeded);
}

TEST_CASE("permute_exponents sends coordinate i to variable pi(i)") {
  CHECK(permute_exponents({2, 3, 1}, {5, 6, 7}) == ExpVector{7, 5, 6});
}
