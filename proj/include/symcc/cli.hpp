#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symcc/algebra.hpp"
#include "symcc/closed_forms.hpp"
#include "symcc/constraint.hpp"

namespace symcc::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Malformed vector text. token and line are 1-based; line is 0 for single-vector input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t token, std::size_t line = 0)
      : std::runtime_error(what), token_(token), line_(line) {}
  [[nodiscard]] std::size_t token() const { return token_; }
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t token_;
  std::size_t line_;
};

/// Comma- and/or whitespace-separated integers.
RawVector parse_vector(std::string_view text);

/// One vector per line; blank lines and lines starting with '#' are skipped.
std::vector<RawVector> parse_batch(std::istream& in);

enum class Engine { kAuto, kT1, kT2, kOracle };
enum class Format { kJson, kText };

Engine parse_engine(std::string_view name);
std::string_view engine_name(Engine e);

struct JobSpec {
  std::vector<RawVector> vectors;
  Engine engine = Engine::kAuto;
  std::optional<std::size_t> series_order;
  bool multivariate = false;
  Format format = Format::kJson;
  bool reduce = true;

  std::size_t multi_guard = 6;
  std::size_t oracle_max_weight = 25;
  std::size_t lattice_point_cap = 1'000'000;

  // bench
  std::int64_t n_lo = 3;
  std::int64_t n_hi = 12;
  std::int64_t band = 5;
  std::uint64_t seed = 1;
  std::string output_path;
};

/// Series order used for oracle-only results when none was requested.
inline constexpr std::size_t kDefaultOracleOrder = 10;

/// Everything cmd_compute reports for one input vector.
struct ComputeResult {
  RawVector input;
  RawVector sorted;
  std::int64_t s = 0;
  Engine engine = Engine::kAuto;
  bool oracle_only = false;
  std::string note;
  std::optional<FactoredGF> gf;
  std::optional<Series> series;
  std::optional<MultiGF> multi;
  std::optional<std::size_t> lattice_points;
  std::vector<std::vector<std::int64_t>> generator_columns;
  std::vector<std::int64_t> column_divisors;
};

/**
 * Runs one vector through the selected engine. Auto picks t1 when the
 * entries sum to 1, t2 when the general hypotheses hold, and the oracle
 * otherwise. Forcing an engine whose hypotheses fail throws
 * ValidationError.
 */
ComputeResult compute_one(const RawVector& raw, const JobSpec& job);

nlohmann::json to_json(const ComputeResult& r);
std::string to_text(const ComputeResult& r);

int cmd_compute(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Engine series for one vector to the given order; throws ValidationError when no engine applies.
using SeriesEngine = std::function<Series(const RawVector&, std::size_t)>;

/// t1 or t2 (with column reduction) depending on the input.
Series engine_series(const RawVector& raw, std::size_t order);

/**
 * Compares engine and oracle series to order job.series_order for every
 * vector. Vectors no engine accepts are counted as skipped.
 */
int cmd_verify(const JobSpec& job, std::ostream& out, std::ostream& err,
               const SeriesEngine& engine = engine_series);

/// Uniform entries in [-band, band] summing to 1, sorted ascending.
RawVector random_sum_one_vector(std::int64_t n, std::int64_t band, std::mt19937_64& rng);

struct BenchRow {
  std::int64_t n = 0;
  double millis = 0;
  std::size_t terms = 0;
  RawVector vector;
};

/// One timed gf_q_t1 call per n in [job.n_lo, job.n_hi], no warmup.
std::vector<BenchRow> run_bench(const JobSpec& job);

int cmd_bench(const JobSpec& job, std::ostream& out, std::ostream& err);

int cmd_examples(const ExampleParams& params, std::size_t order, Format format, std::ostream& out,
                 std::ostream& err);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symcc::cli
