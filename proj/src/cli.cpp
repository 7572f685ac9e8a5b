#include "symcc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symcc/general.hpp"
#include "symcc/oracle.hpp"
#include "symcc/sum_one.hpp"

namespace symcc::cli {

using nlohmann::json;

RawVector parse_vector(std::string_view text) {
  RawVector out;
  std::size_t token = 0;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    ++token;
    const std::string tok(text.substr(i, j - i));
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || used == 0) {
      throw ParseError("malformed integer '" + tok + "' at token " + std::to_string(token), token);
    }
    out.push_back(v);
    i = j;
  }
  if (out.empty()) throw ParseError("empty vector", 0);
  return out;
}

std::vector<RawVector> parse_batch(std::istream& in) {
  std::vector<RawVector> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_vector(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.token(), line_no);
    }
  }
  return out;
}

Engine parse_engine(std::string_view name) {
  if (name == "auto") return Engine::kAuto;
  if (name == "t1") return Engine::kT1;
  if (name == "t2") return Engine::kT2;
  if (name == "oracle") return Engine::kOracle;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::kAuto:
      return "auto";
    case Engine::kT1:
      return "t1";
    case Engine::kT2:
      return "t2";
    case Engine::kOracle:
      return "oracle";
  }
  return "?";
}

namespace {

void check_oracle_order(std::size_t order, const JobSpec& job) {
  if (order > job.oracle_max_weight) {
    throw GuardExceeded("oracle weight " + std::to_string(order) + " exceeds guard " +
                        std::to_string(job.oracle_max_weight));
  }
}

void fill_t2(ComputeResult& r, const ConstraintVector& a, const JobSpec& job) {
  const Parallelepiped cell =
      parallelepiped_points(generator_matrix_t2(a, job.reduce), job.lattice_point_cap);
  r.engine = Engine::kT2;
  r.gf = gf_q_general(cell);
  r.lattice_points = cell.points.size();
  const IntMatrix& m = cell.matrix.a;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<std::int64_t> col;
    for (const auto& v : m.column(j)) col.push_back(to_int64(v));
    r.generator_columns.push_back(std::move(col));
    r.column_divisors.push_back(to_int64(cell.matrix.column_divisors[j]));
  }
  if (job.multivariate) r.multi = gf_multi_general(a, job.multi_guard, job.reduce, job.lattice_point_cap);
}

}  // namespace

ComputeResult compute_one(const RawVector& raw, const JobSpec& job) {
  ComputeResult r;
  r.input = raw;
  const ConstraintVector a(raw);
  r.sorted = a.values();
  r.s = a.sum();

  Engine chosen = job.engine;
  if (chosen == Engine::kAuto) {
    if (a.sum() == 1) {
      chosen = Engine::kT1;
    } else {
      try {
        validate_general(raw);
        chosen = Engine::kT2;
      } catch (const ValidationError& e) {
        chosen = Engine::kOracle;
        r.note = e.what();
      }
    }
  }

  switch (chosen) {
    case Engine::kT1: {
      const ConstraintVector v = validate_sum_one(raw);
      r.engine = Engine::kT1;
      r.gf = gf_q_t1(v);
      if (job.multivariate) r.multi = gf_multi_t1(v, job.multi_guard);
      break;
    }
    case Engine::kT2:
      fill_t2(r, validate_general(raw), job);
      break;
    default: {
      const std::size_t order = job.series_order.value_or(kDefaultOracleOrder);
      check_oracle_order(order, job);
      r.engine = Engine::kOracle;
      r.oracle_only = true;
      r.series = oracle::count_by_weight(raw, static_cast<std::int64_t>(order));
      return r;
    }
  }
  if (job.series_order) r.series = series_expand(*r.gf, *job.series_order);
  return r;
}

namespace {

std::vector<std::int64_t> sorted_denominators(const FactoredGF& gf) {
  std::vector<std::int64_t> d = gf.denom_exponents();
  std::sort(d.begin(), d.end());
  return d;
}

json series_json(const Series& s) {
  json arr = json::array();
  for (const auto& c : s) arr.push_back(c.get_str());
  return arr;
}

json multi_json(const MultiGF& gf) {
  json terms = json::array();
  for (const auto& t : gf.terms()) {
    json num = json::array();
    for (const auto& [v, c] : t.numerator) num.push_back({{"exponents", v}, {"coefficient", c.get_str()}});
    terms.push_back({{"numerator", num}, {"denominators", t.denominators}});
  }
  return terms;
}

}  // namespace

json to_json(const ComputeResult& r) {
  json j;
  j["input"] = r.input;
  j["sorted"] = r.sorted;
  j["s"] = r.s;
  j["engine"] = std::string(engine_name(r.engine));
  j["oracle_only"] = r.oracle_only;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.gf) {
    j["denominators"] = sorted_denominators(*r.gf);
    json num = json::array();
    for (const auto& [e, c] : r.gf->numerator().terms()) num.push_back({e, c.get_str()});
    j["numerator"] = num;
  }
  if (r.series) j["series"] = series_json(*r.series);
  if (r.multi) j["multivariate"] = multi_json(*r.multi);
  if (r.lattice_points) {
    j["lattice_points"] = *r.lattice_points;
    j["generators"] = r.generator_columns;
    j["column_divisors"] = r.column_divisors;
  }
  return j;
}

namespace {

std::string vec_text(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

std::string to_text(const ComputeResult& r) {
  std::ostringstream os;
  os << "a = " << vec_text(r.input) << "  sorted " << vec_text(r.sorted) << "  s = " << r.s << "  engine "
     << engine_name(r.engine) << "\n";
  if (r.oracle_only) os << "  oracle only: " << (r.note.empty() ? "engine not requested" : r.note) << "\n";
  if (r.gf) {
    os << "  F(q) = (" << to_string(r.gf->numerator()) << ") / (";
    for (auto e : sorted_denominators(*r.gf)) os << "(1 - q^" << e << ")";
    os << ")\n";
  }
  if (r.lattice_points) {
    os << "  lattice points: " << *r.lattice_points << "  generators:";
    for (const auto& c : r.generator_columns) os << " " << vec_text(c);
    os << "\n";
  }
  if (r.series) os << "  series: " << to_string(*r.series) << "\n";
  if (r.multi) {
    os << "  multivariate terms: " << r.multi->terms().size() << "\n";
    for (const auto& t : r.multi->terms()) {
      os << "    (";
      bool first = true;
      for (const auto& [v, c] : t.numerator) {
        os << (first ? "" : " + ") << c << "*z^" << vec_text(v);
        first = false;
      }
      os << ") /";
      for (const auto& d : t.denominators) os << " (1 - z^" << vec_text(d) << ")";
      os << "\n";
    }
  }
  return os.str();
}

int cmd_compute(const JobSpec& job, std::ostream& out, std::ostream& err) {
  std::vector<ComputeResult> results;
  results.reserve(job.vectors.size());
  for (const auto& v : job.vectors) {
    try {
      results.push_back(compute_one(v, job));
    } catch (const std::invalid_argument& e) {
      err << "error: " << vec_text(v) << ": " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::length_error& e) {
      err << "error: " << vec_text(v) << ": " << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (job.format == Format::kJson) {
    json doc;
    doc["results"] = json::array();
    for (const auto& r : results) doc["results"].push_back(to_json(r));
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) out << to_text(r);
  }
  return kExitOk;
}

Series engine_series(const RawVector& raw, std::size_t order) {
  const ConstraintVector a(raw);
  if (a.sum() == 1) return series_expand(gf_q_t1(a), order);
  return series_expand(gf_q_general(validate_general(raw)), order);
}

int cmd_verify(const JobSpec& job, std::ostream& out, std::ostream& err, const SeriesEngine& engine) {
  const std::size_t order = job.series_order.value_or(kDefaultOracleOrder);
  try {
    check_oracle_order(order, job);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t mismatches = 0;
  for (const auto& v : job.vectors) {
    Series got;
    try {
      got = engine(v, order);
    } catch (const ValidationError& e) {
      ++skipped;
      out << "skip " << vec_text(v) << ": " << e.what() << "\n";
      continue;
    }
    ++checked;
    const Series expected = oracle::count_by_weight(v, static_cast<std::int64_t>(order));
    for (std::size_t m = 0; m <= order; ++m) {
      const Integer g = m < got.size() ? got[m] : Integer(0);
      if (g != expected[m]) {
        ++mismatches;
        out << "mismatch " << vec_text(v) << " weight " << m << " expected " << expected[m] << " got " << g
            << "\n";
        break;
      }
    }
  }
  out << "checked " << checked << " vectors to weight " << order << ", skipped " << skipped << ", mismatches "
      << mismatches << "\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

RawVector random_sum_one_vector(std::int64_t n, std::int64_t band, std::mt19937_64& rng) {
  if (n < 1 || band < 1) throw std::invalid_argument("random_sum_one_vector: need n >= 1 and band >= 1");
  std::uniform_int_distribution<std::int64_t> dist(-band, band);
  RawVector v(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 10'000'000; ++attempt) {
    std::int64_t sum = 0;
    for (auto& x : v) sum += (x = dist(rng));
    if (sum == 1) {
      std::sort(v.begin(), v.end());
      return v;
    }
  }
  throw std::runtime_error("random_sum_one_vector: no sample with sum 1");
}

std::vector<BenchRow> run_bench(const JobSpec& job) {
  std::mt19937_64 rng(job.seed);
  std::vector<BenchRow> rows;
  for (std::int64_t n = job.n_lo; n <= job.n_hi; ++n) {
    BenchRow row;
    row.n = n;
    row.vector = random_sum_one_vector(n, job.band, rng);
    const ConstraintVector a(row.vector);
    const auto start = std::chrono::steady_clock::now();
    const FactoredGF gf = gf_q_t1(a);
    const auto stop = std::chrono::steady_clock::now();
    row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    row.terms = gf.numerator().size();
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_bench(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.n_lo < 1 || job.n_hi < job.n_lo) {
    err << "error: bad n range " << job.n_lo << ".." << job.n_hi << "\n";
    return kExitUsage;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!job.output_path.empty()) {
    file.open(job.output_path);
    if (!file) {
      err << "error: cannot open " << job.output_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  *sink << "n,millis,terms\n";
  int status = kExitOk;
  for (const auto& row : run_bench(job)) {
    *sink << row.n << "," << std::fixed << std::setprecision(3) << row.millis << "," << row.terms << "\n";
    if (row.terms > (std::size_t{1} << (row.n - 1))) {
      err << "n = " << row.n << ": " << row.terms << " numerator terms exceeds 2^(n-1)\n";
      status = kExitMismatch;
    }
  }
  return status;
}

int cmd_examples(const ExampleParams& params, std::size_t order, Format format, std::ostream& out,
                 std::ostream& err) {
  Series closed;
  RawVector vec;
  try {
    vec = example_vector(params).values();
    switch (params.family) {
      case 1:
        closed = series_expand(example1_gf(params.n, params.b), order);
        break;
      case 2:
        closed = series_expand(example2_gf(params.n, params.b), order);
        break;
      case 3:
        closed = example3_gf(params.n, params.b, order);
        break;
      default:
        closed = example4_gf(params.n, params.k, params.l, order);
        break;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Series engine = series_expand(gf_q_t1(ConstraintVector(vec)), order);
  const bool match = engine == closed;
  if (format == Format::kJson) {
    json doc{{"family", params.family},  {"vector", vec},     {"closed_form_series", series_json(closed)},
             {"engine_series", series_json(engine)}, {"match", match}};
    out << doc.dump(2) << "\n";
  } else {
    out << "family " << params.family << " vector " << vec_text(vec) << "\n"
        << "  closed form: " << to_string(closed) << "\n"
        << "  engine:      " << to_string(engine) << "\n"
        << "  " << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? kExitOk : kExitMismatch;
}

namespace {

std::vector<RawVector> gather_vectors(const std::vector<std::string>& inline_vectors, const std::string& input) {
  std::vector<RawVector> out;
  for (const auto& text : inline_vectors) out.push_back(parse_vector(text));
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file " + input);
    auto batch = parse_batch(in);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "text") return Format::kText;
  throw std::invalid_argument("unknown format '" + s + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions for symmetrically constrained compositions"};
  app.require_subcommand(1);

  JobSpec job;
  std::vector<std::string> inline_vectors;
  std::string input;
  std::string engine = "auto";
  std::string format = "json";
  std::size_t series = 0;
  bool no_reduce = false;

  auto* compute = app.add_subcommand("compute", "Generating function of one or more constraint vectors");
  compute->add_option("--a", inline_vectors, "Constraint vector, e.g. \"-1,1,1\"")->allow_extra_args(false);
  compute->add_option("--input", input, "Batch file, one vector per line");
  compute->add_option("--engine", engine, "auto|t1|t2|oracle");
  auto* series_opt = compute->add_option("--series", series, "Also expand the series to this order");
  compute->add_flag("--multi", job.multivariate, "Emit the multivariate term list");
  compute->add_option("--format", format, "json|text");
  compute->add_flag("--no-reduce", no_reduce, "Skip gcd column reduction in the general engine");
  compute->add_option("--multi-guard", job.multi_guard, "Largest n for multivariate output");
  compute->add_option("--lattice-cap", job.lattice_point_cap, "Largest parallelepiped point count");
  compute->add_option("--oracle-guard", job.oracle_max_weight, "Largest oracle weight");

  auto* verify = app.add_subcommand("verify", "Compare engine series against brute-force counts");
  verify->add_option("--a", inline_vectors, "Constraint vector")->allow_extra_args(false);
  verify->add_option("--input", input, "Batch file, one vector per line");
  auto* max_weight_opt = verify->add_option("--max-weight", series, "Largest weight compared");
  verify->add_option("--oracle-guard", job.oracle_max_weight, "Largest oracle weight");

  auto* bench = app.add_subcommand("bench", "Time the sum-one engine on random vectors");
  std::string n_range = "3..12";
  bench->add_option("--n-range", n_range, "LO..HI");
  bench->add_option("--seed", job.seed, "Random seed");
  bench->add_option("--band", job.band, "Entries are drawn from [-band, band]");
  bench->add_option("--out", job.output_path, "CSV output file (default stdout)");

  auto* examples = app.add_subcommand("examples", "Closed-form families against the engine");
  ExampleParams params;
  examples->add_option("--family", params.family, "1|2|3|4")->required();
  examples->add_option("--n", params.n, "Dimension")->required();
  examples->add_option("--b", params.b, "Families 1-3");
  examples->add_option("--k", params.k, "Family 4");
  examples->add_option("--l", params.l, "Family 4");
  auto* ex_series = examples->add_option("--series", series, "Series order");
  examples->add_option("--format", format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    job.format = parse_format(format);
    job.engine = parse_engine(engine);
    job.reduce = !no_reduce;
    if (*compute) {
      job.vectors = gather_vectors(inline_vectors, input);
      if (job.vectors.empty()) throw std::invalid_argument("no vectors given (use --a or --input)");
      if (*series_opt) job.series_order = series;
      return cmd_compute(job, out, err);
    }
    if (*verify) {
      job.vectors = gather_vectors(inline_vectors, input);
      if (*max_weight_opt) job.series_order = series;
      return cmd_verify(job, out, err);
    }
    if (*bench) {
      const auto dots = n_range.find("..");
      if (dots == std::string::npos) throw std::invalid_argument("--n-range must look like LO..HI");
      job.n_lo = std::stoll(n_range.substr(0, dots));
      job.n_hi = std::stoll(n_range.substr(dots + 2));
      return cmd_bench(job, out, err);
    }
    return cmd_examples(params, *ex_series ? series : 20, job.format, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace symcc::cli
