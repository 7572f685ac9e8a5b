#include "symcc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symcc::oracle {

std::int64_t Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), std::int64_t{0}); }

namespace {

__int128 pairing(std::span<const std::int64_t> a, std::span<const std::int64_t> lambda) {
  __int128 total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<__int128>(a[i]) * lambda[i];
  return total;
}

}  // namespace

bool is_valid(std::span<const std::int64_t> lambda, std::span<const std::int64_t> a, Mode mode) {
  if (lambda.size() != a.size()) {
    throw std::invalid_argument("composition has " + std::to_string(lambda.size()) + " parts but a has " +
                                std::to_string(a.size()) + " entries");
  }
  if (mode == Mode::kFast) {
    // Rearrangement: a ascending against lambda descending minimizes the form.
    std::vector<std::int64_t> sa(a.begin(), a.end());
    std::vector<std::int64_t> sl(lambda.begin(), lambda.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sl.begin(), sl.end(), std::greater<>());
    return pairing(sa, sl) >= 0;
  }
  std::vector<std::size_t> pi(lambda.size());
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  std::vector<std::int64_t> permuted(lambda.size());
  do {
    for (std::size_t i = 0; i < pi.size(); ++i) permuted[i] = lambda[pi[i]];
    if (pairing(a, permuted) < 0) return false;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return true;
}

Series count_by_weight(std::span<const std::int64_t> a, std::int64_t max_weight, Mode mode) {
  if (max_weight < 0) throw std::invalid_argument("count_by_weight: max_weight must be >= 0");
  Series counts(static_cast<std::size_t>(max_weight + 1));
  for (std::int64_t m = 0; m <= max_weight; ++m) {
    Integer& slot = counts[static_cast<std::size_t>(m)];
    for_each_composition(a.size(), m, [&](const std::vector<std::int64_t>& parts) {
      if (is_valid(parts, a, mode)) ++slot;
    });
  }
  return counts;
}

std::vector<Composition> valid_set(std::span<const std::int64_t> a, std::int64_t max_weight) {
  if (max_weight < 0) throw std::invalid_argument("valid_set: max_weight must be >= 0");
  std::vector<Composition> out;
  for (std::int64_t m = 0; m <= max_weight; ++m) {
    for_each_composition(a.size(), m, [&](const std::vector<std::int64_t>& parts) {
      if (is_valid(parts, a)) out.push_back({parts});
    });
  }
  return out;
}

MultiSeries valid_indicator(std::span<const std::int64_t> a, std::int64_t max_weight) {
  MultiSeries out;
  for (auto& c : valid_set(a, max_weight)) out.emplace(std::move(c.parts), 1);
  return out;
}

}  // namespace symcc::oracle
