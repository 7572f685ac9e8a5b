#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symcc/algebra.hpp"
#include "symcc/constraint.hpp"

namespace symcc::oracle {

/// Nonnegative parts lambda_1..lambda_n.
struct Composition {
  std::vector<std::int64_t> parts;

  [[nodiscard]] std::int64_t weight() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

enum class Mode {
  kFast,  // one check: a ascending against lambda descending
  kFull,  // all n! permutations
};

/**
 * Whether sum_i a_i lambda_{pi(i)} >= 0 for every permutation pi. The
 * vector a may be in any order. Throws std::invalid_argument on a length
 * mismatch.
 */
bool is_valid(std::span<const std::int64_t> lambda, std::span<const std::int64_t> a, Mode mode = Mode::kFast);

/// Calls f(parts) for every composition of weight into n nonnegative parts, lexicographically.
template <class F>
void for_each_composition(std::size_t n, std::int64_t weight, F&& f);

/// Entry M = number of valid compositions of weight M, for M = 0..max_weight.
Series count_by_weight(std::span<const std::int64_t> a, std::int64_t max_weight, Mode mode = Mode::kFast);

/// All valid compositions of weight <= max_weight, by weight then lexicographically.
std::vector<Composition> valid_set(std::span<const std::int64_t> a, std::int64_t max_weight);

/// Indicator series of valid_set, keyed by exponent vector.
MultiSeries valid_indicator(std::span<const std::int64_t> a, std::int64_t max_weight);

template <class F>
void for_each_composition(std::size_t n, std::int64_t weight, F&& f) {
  if (n == 0) return;
  std::vector<std::int64_t> parts(n, 0);
  // Stars and bars; parts[0] varies slowest.
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos + 1 == n) {
      parts[pos] = remaining;
      f(static_cast<const std::vector<std::int64_t>&>(parts));
      return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, weight);
}

}  // namespace symcc::oracle
