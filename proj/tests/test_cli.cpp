#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "symcc/cli.hpp"
#include "symcc/oracle.hpp"
#include "test_support.hpp"

using namespace symcc;
using namespace symcc::cli;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "symcc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

std::vector<std::string> strings(const Series& s) {
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(c.get_str());
  return out;
}

}  // namespace

TEST_CASE("parse_vector examples") {
  CHECK(parse_vector("-1,1,1") == RawVector{-1, 1, 1});
  CHECK(parse_vector("  -1  3 ") == RawVector{-1, 3});
  CHECK(parse_vector("4, -2,\t7") == RawVector{4, -2, 7});
  try {
    parse_vector("-1,a,1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == 2);
  }
  CHECK_THROWS_AS(parse_vector("1,2x"), ParseError);
  CHECK_THROWS_AS(parse_vector("   "), ParseError);
}

TEST_CASE("parse_batch skips comments and reports line numbers") {
  std::istringstream ok("# triangle\n-1,1,1\n\n  # indented comment\n-1 3\n");
  CHECK(parse_batch(ok) == std::vector<RawVector>{{-1, 1, 1}, {-1, 3}});
  std::istringstream bad("-1,1,1\n# c\n-1,x\n");
  try {
    parse_batch(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.token() == 2);
  }
}

TEST_CASE("parse_engine names") {
  CHECK(parse_engine("t2") == Engine::kT2);
  CHECK(engine_name(parse_engine("oracle")) == "oracle");
  CHECK_THROWS_AS(parse_engine("t3"), std::invalid_argument);
}

TEST_CASE("compute on the triangle") {
  const RunResult r = run_cli({"compute", "--a", "-1,1,1", "--series", "6"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  const json& res = doc["results"][0];
  CHECK(res["engine"] == "t1");
  CHECK(res["s"] == 1);
  CHECK(res["denominators"] == json({2, 3, 4}));
  CHECK(res["numerator"] == json::parse(R"([[0,"1"],[2,"2"],[4,"2"],[6,"1"]])"));
  // Degree 6 is 10: 28 compositions of 6 into 3 parts, minus 18 with a part above 3.
  CHECK(res["series"] == json({"1", "0", "3", "1", "6", "3", "10"}));
  CHECK(strings(oracle::count_by_weight(RawVector{-1, 1, 1}, 6)) ==
        res["series"].get<std::vector<std::string>>());
}

TEST_CASE("compute small cases") {
  const json one = json::parse(run_cli({"compute", "--a", "1"}).out)["results"][0];
  CHECK(one["numerator"] == json::parse(R"([[0,"1"]])"));
  CHECK(one["denominators"] == json({1}));

  const RunResult free = run_cli({"compute", "--a", "1,1", "--series", "4"});
  CHECK(free.code == kExitOk);
  const json res = json::parse(free.out)["results"][0];
  CHECK(res["oracle_only"] == true);
  CHECK(res["engine"] == "oracle");
  CHECK(res["series"] == json({"1", "2", "3", "4", "5"}));
  CHECK(res.contains("note"));
}

TEST_CASE("compute JSON round-trips to the emitted series") {
  std::ostringstream batch;
  batch << "-1,1,1\n-1,3\n-2,1,2\n-1,-1,4\n-3,0,2,2\n";
  const auto path = write_temp("symcc_roundtrip.txt", batch.str());
  const RunResult r = run_cli({"compute", "--input", path.string(), "--series", "15"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  REQUIRE(doc["results"].size() == 5);
  CHECK(doc["results"][1]["input"] == json({-1, 3}));
  for (const json& res : doc["results"]) {
    std::vector<LaurentPoly::Term> terms;
    for (const json& t : res["numerator"]) terms.emplace_back(t[0].get<std::int64_t>(), Integer(t[1].get<std::string>()));
    const FactoredGF gf(LaurentPoly::from_terms(terms), res["denominators"].get<std::vector<std::int64_t>>());
    CHECK(strings(series_expand(gf, 15)) == res["series"].get<std::vector<std::string>>());
  }
  std::filesystem::remove(path);
}

TEST_CASE("forcing t2 on a sum-one input does not change the series") {
  for (const char* v : {"-1,1,1", "-1,2", "-2,1,2", "-4,0,1,2,2"}) {
    const json t1 = json::parse(run_cli({"compute", "--a", v, "--series", "20"}).out)["results"][0];
    const json t2 =
        json::parse(run_cli({"compute", "--a", v, "--series", "20", "--engine", "t2"}).out)["results"][0];
    CHECK(t1["engine"] == "t1");
    CHECK(t2["engine"] == "t2");
    CHECK(t1["series"] == t2["series"]);
    CHECK(t2["lattice_points"] == 1);
  }
}

TEST_CASE("general engine output carries the lattice data") {
  const json res = json::parse(run_cli({"compute", "--a", "-1,3", "--no-reduce"}).out)["results"][0];
  CHECK(res["engine"] == "t2");
  CHECK(res["lattice_points"] == 2);
  CHECK(res["generators"] == json::parse("[[3,1],[1,1]]"));
  CHECK(res["numerator"] == json::parse(R"([[0,"1"],[3,"2"],[4,"1"]])"));
}

TEST_CASE("multivariate output") {
  const json res = json::parse(run_cli({"compute", "--a", "-1,2", "--multi"}).out)["results"][0];
  CHECK(res["multivariate"].size() == 2);
  const RunResult too_big = run_cli({"compute", "--a", "-1,0,0,0,0,0,0,2", "--multi"});
  CHECK(too_big.code == kExitUsage);
}

TEST_CASE("text format") {
  const RunResult r = run_cli({"compute", "--a", "-1,3", "--format", "text", "--series", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("engine t2") != std::string::npos);
  CHECK(r.out.find("lattice points: 2") != std::string::npos);
}

TEST_CASE("usage and validation errors exit with 2") {
  CHECK(run_cli({"compute", "--a", "-1,a,1"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--a", "-1,3", "--engine", "t1"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--a", "1,1", "--engine", "t2"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--a", "1,1", "--series", "30"}).code == kExitUsage);
  CHECK(run_cli({"compute"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--a", "1", "--engine", "nope"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--input", "/nonexistent/file"}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--a", "-1,-1,4", "--no-reduce", "--lattice-cap", "3"}).code == kExitUsage);

  const auto path = write_temp("symcc_bad_batch.txt", "-1,1,1\n# ok\n-1,b\n");
  const RunResult r = run_cli({"compute", "--input", path.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify passes on the reference vectors") {
  const auto path = write_temp("symcc_verify.txt", "-1,1,1\n-1,3\n-2,1,2\n");
  const RunResult r = run_cli({"verify", "--input", path.string(), "--max-weight", "12"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("checked 3 vectors to weight 12, skipped 0, mismatches 0") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify reports the first differing weight of a corrupted engine") {
  JobSpec job;
  job.vectors = {{-1, 1, 1}, {-1, 3}};
  job.series_order = 8;
  auto corrupted = [](const RawVector& v, std::size_t order) {
    Series s = engine_series(v, order);
    if (v.size() == 3) s[5] += 1;
    return s;
  };
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_verify(job, out, err, corrupted) == kExitMismatch);
  CHECK(out.str().find("mismatch [-1,1,1] weight 5 expected 3 got 4") != std::string::npos);
  CHECK(out.str().find("mismatches 1") != std::string::npos);
}

TEST_CASE("verify on no vectors succeeds with zero checks") {
  JobSpec job;
  job.series_order = 10;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_verify(job, out, err) == kExitOk);
  CHECK(out.str().find("checked 0 vectors") != std::string::npos);
}

TEST_CASE("verify skips vectors no engine accepts") {
  const RunResult r = run_cli({"verify", "--a", "1,1", "--a", "-1,2", "--max-weight", "6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("skip [1,1]") != std::string::npos);
  CHECK(r.out.find("checked 1 vectors to weight 6, skipped 1") != std::string::npos);
}

TEST_CASE("bench is deterministic and respects the term bound") {
  JobSpec job;
  job.n_lo = 3;
  job.n_hi = 8;
  job.seed = 42;
  const auto first = run_bench(job);
  const auto second = run_bench(job);
  REQUIRE(first.size() == 6);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].vector == second[i].vector);
    CHECK(first[i].terms == second[i].terms);
    CHECK(first[i].terms <= (std::size_t{1} << (first[i].n - 1)));
    std::int64_t sum = 0;
    for (auto x : first[i].vector) sum += x;
    CHECK(sum == 1);
    CHECK(std::is_sorted(first[i].vector.begin(), first[i].vector.end()));
  }
  CHECK(first[0].terms <= 4);
}

TEST_CASE("bench writes CSV") {
  const auto path = std::filesystem::temp_directory_path() / "symcc_bench.csv";
  const RunResult r = run_cli({"bench", "--n-range", "3..5", "--seed", "7", "--out", path.string()});
  CHECK(r.code == kExitOk);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,millis,terms");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3);
  std::filesystem::remove(path);
  CHECK(run_cli({"bench", "--n-range", "5-3"}).code == kExitUsage);
}

TEST_CASE("examples subcommand") {
  const RunResult r = run_cli({"examples", "--family", "2", "--n", "3", "--b", "1", "--series", "10"});
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["match"] == true);
  CHECK(doc["vector"] == json({-1, 1, 1}));
  CHECK(run_cli({"examples", "--family", "4", "--n", "3", "--k", "1", "--l", "2", "--format", "text"}).code ==
        kExitOk);
  CHECK(run_cli({"examples", "--family", "4", "--n", "3", "--k", "3", "--l", "2"}).code == kExitUsage);
}
