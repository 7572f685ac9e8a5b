#include "symcc/permstat.hpp"

#include <algorithm>
#include <string>

namespace symcc {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(p));
}

namespace {

DescentStats stats_of(const std::vector<int>& p) {
  DescentStats s;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j] > p[j + 1]) {
      const int pos = static_cast<int>(j) + 1;
      s.descent_set.push_back(pos);
      ++s.des;
      s.maj += pos;
    }
  }
  return s;
}

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("permutation order must be >= 1");
  if (n > kMaxEnumerationOrder) {
    throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                            std::to_string(kMaxEnumerationOrder));
  }
}

}  // namespace

DescentStats descent_stats(const Permutation& pi) { return stats_of(pi.one_line()); }

LaurentPoly maj_distribution(int n) {
  check_order(n);
  std::map<std::int64_t, Integer> acc;
  for_each_permutation(n, [&](const std::vector<int>& p) { acc[stats_of(p).maj] += 1; });
  std::vector<LaurentPoly::Term> terms(acc.begin(), acc.end());
  return LaurentPoly::from_terms(terms);
}

BiPoly carlitz(int n) { return carlitz_nodesc(n, 0); }

BiPoly carlitz_nodesc(int n, int i) {
  check_order(n);
  if (i < 0 || i > n - 1) {
    throw std::out_of_range("carlitz_nodesc: i = " + std::to_string(i) + " outside [0, " +
                            std::to_string(n - 1) + "]");
  }
  const int first_forbidden = n - i;
  std::map<BiExponent, Integer> acc;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    DescentStats s = stats_of(p);
    if (!s.descent_set.empty() && s.descent_set.back() >= first_forbidden) return;
    acc[BiExponent{s.des, s.maj}] += 1;
  });
  std::vector<BiPoly::Term> terms(acc.begin(), acc.end());
  return BiPoly::from_terms(terms);
}

DescentWeightTable::DescentWeightTable(std::span<const LaurentPoly> weights) {
  const std::size_t levels = weights.size() + 1;
  rows_.reserve(levels);
  rows_.push_back({LaurentPoly(1)});
  for (std::size_t k = 2; k <= levels; ++k) {
    const auto& prev = rows_.back();
    const LaurentPoly& u = weights[k - 2];
    LaurentPoly prev_sum;
    for (const auto& g : prev) prev_sum += g;

    std::vector<LaurentPoly> row;
    row.reserve(k);
    row.push_back(u * prev_sum);
    for (std::size_t i = 2; i <= k; ++i) {
      const LaurentPoly& g = prev[i - 2];
      row.push_back(row.back() + g - u * g);
    }
    rows_.push_back(std::move(row));
  }
}

const LaurentPoly& DescentWeightTable::at(int k, int i) const {
  if (k < 1 || k > rows() || i < 1 || i > k) throw std::out_of_range("DescentWeightTable index");
  return rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
}

std::size_t DescentWeightTable::entries() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

LaurentPoly algorithm_g(int n, std::span<const LaurentPoly> weights) {
  if (n < 1) throw std::invalid_argument("algorithm_g: n must be >= 1");
  if (weights.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("algorithm_g: expected " + std::to_string(n - 1) + " weights, got " +
                                std::to_string(weights.size()));
  }
  std::vector<LaurentPoly> padded(weights.begin(), weights.end());
  padded.emplace_back(1);
  DescentWeightTable table(padded);
  return table.at(n + 1, n + 1);
}

LaurentPoly descent_weight_sum_direct(int n, std::span<const LaurentPoly> weights) {
  check_order(n);
  if (weights.size() + 1 < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("descent_weight_sum_direct: too few weights");
  }
  LaurentPoly total;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    LaurentPoly term = 1;
    for (int j : stats_of(p).descent_set) term *= weights[static_cast<std::size_t>(j - 1)];
    total += term;
  });
  return total;
}

}  // namespace symcc
