#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>

#include "evalcode/error.hpp"
#include "evalcode/io.hpp"
#include "evalcode/report.hpp"
#include "evalcode/verify.hpp"
#include "support.hpp"

using namespace evalcode;
using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(EVALCODE_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("evalcode_test_" + name)).string();
}

ErrorCode parse_code(const std::string& text) {
  try {
    parse_point_set_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("point set files") {
  auto f = read_point_set_file(support::fixture("example_3_4.json"));
  CHECK_FALSE(f.field.is_prime());
  CHECK(f.k == 3);
  CHECK(f.entries.size() == 10);
  auto X = to_point_set(f, RationalField{});
  CHECK(X == support::columns(RationalField{}, support::g34));

  auto g = parse_point_set_file(
      R"({"field": {"type": "prime", "p": 7}, "k": 2, "points": [[1, "3"], ["1/2", 1]]})");
  auto Y = to_point_set(g, PrimeField(7));
  CHECK(Y.size() == 2);
  auto h = parse_point_set_file(R"({"field": {"type": "rational"}, "k": 2, "points": [["1/2", 3]]})");
  auto Z = to_point_set(h, RationalField{});
  CHECK(Z[0].coords()[1] == mpq_class(6));

  CHECK(parse_code("{") == ErrorCode::parse_error);
  CHECK(parse_code(R"({"field": {"type": "rational"}, "k": 2})") == ErrorCode::parse_error);
  CHECK(parse_code(R"({"field": {"type": "rational"}, "k": 2, "points": [], "x": 1})") ==
        ErrorCode::parse_error);
  CHECK(parse_code(R"({"field": {"type": "prime"}, "k": 2, "points": []})") ==
        ErrorCode::parse_error);
  CHECK(parse_code(R"({"field": {"type": "rational"}, "k": 2, "points": [[1, 2, 3]]})") ==
        ErrorCode::dimension_mismatch);

  auto dup = parse_point_set_file(R"({"field": {"type": "rational"}, "k": 2, "points": [[1, 2], [2, 4]]})");
  CHECK_THROWS_AS(to_point_set(dup, RationalField{}), Error);
  auto zero = parse_point_set_file(R"({"field": {"type": "prime", "p": 5}, "k": 2, "points": [[5, 10]]})");
  CHECK_THROWS_AS(to_point_set(zero, PrimeField(5)), Error);
}

TEST_CASE("canonical round trip") {
  const std::string path = support::fixture("single_point.json");
  const std::string text = read_text_file(path);
  auto f = parse_point_set_file(text);
  CHECK(canonical_json(to_point_set(f, PrimeField(101))) == text);

  for (const char* name : {"example_3_4.json", "example_3_9.json", "example_5_2.json"}) {
    auto X = to_point_set(read_point_set_file(support::fixture(name)), RationalField{});
    const std::string once = canonical_json(X);
    auto again = to_point_set(parse_point_set_file(once), RationalField{});
    CHECK(again == X);
    CHECK(canonical_json(again) == once);
  }
  auto X42 = support::columns(PrimeField(103), support::g42);
  const std::string c = canonical_json(X42);
  CHECK(canonical_json(to_point_set(parse_point_set_file(c), PrimeField(103))) == c);
}

TEST_CASE("analysis report") {
  auto X = to_point_set(read_point_set_file(support::fixture("example_3_4.json")), RationalField{});
  AnalyzeOptions opts;
  opts.timing = false;
  auto r = analyze_report(X, opts);
  CHECK(r["schema"] == report_schema);
  CHECK(r["n"] == 10);
  CHECK(r["invariants"]["alpha"] == 4);
  CHECK(r["invariants"]["reg"] == 3);
  CHECK(r["profile"]["d"] == json::array({6, 3, 1}));
  CHECK(r["degrees"][0]["code"]["d"] == 6);
  CHECK(r["degrees"][0]["bounds"]["beta"] == 6);
  CHECK_FALSE(r.contains("timing"));
  // exact output: no floating point anywhere
  std::function<void(const json&)> no_floats = [&](const json& j) {
    CHECK_FALSE(j.is_number_float());
    if (j.is_structured())
      for (const auto& c : j) no_floats(c);
  };
  no_floats(r);
  opts.max_degree = 1;
  CHECK(analyze_report(X, opts)["degrees"].size() == 1);
}

TEST_CASE("published example table") {
  auto rows = verify_published();
  CHECK(rows.size() >= 30);
  for (const auto& row : rows) {
    INFO(row.group << " " << row.setting << " " << row.name << ": expected " << row.expected
                   << ", computed " << row.computed);
    CHECK(row.ok);
  }
  auto only = verify_published(std::string("4.2"));
  CHECK_FALSE(only.empty());
  for (const auto& row : only) CHECK(row.group == "4.2");
  CHECK_THROWS_AS(verify_published(std::string("bogus")), Error);
}

TEST_CASE("command line") {
  const std::string f34 = support::fixture("example_3_4.json");
  auto a = run("analyze " + f34 + " --no-timing");
  CHECK(a.status == 0);
  auto j = json::parse(a.out);
  CHECK(j["invariants"]["alpha"] == 4);
  CHECK(j["degrees"][0]["code"]["d"] == 6);

  auto one = json::parse(run("analyze " + support::fixture("single_point.json")).out);
  CHECK(one["invariants"]["reg"] == 0);
  CHECK(one["profile"]["d"].empty());

  auto j52 = json::parse(run("analyze " + support::fixture("example_5_2.json") + " --no-timing").out);
  CHECK(j52["invariants"]["hilbert_function"] == json::array({1, 3, 6, 10, 15}));

  // output is independent of the thread count
  CHECK(run("analyze " + f34 + " --no-timing --threads 4").out == a.out);

  CHECK(run("analyze /nonexistent.json").status == 2);
  const std::string bad = temp_path("bad.json");
  write_text_file(bad, "{\"k\": 3}");
  CHECK(run("analyze " + bad).status == 2);
  const std::string fano = temp_path("fano.json");
  write_text_file(fano, R"({"field": {"type": "prime", "p": 2}, "k": 3, "points": [[0,0,1],[0,1,0],[0,1,1],[1,0,0],[1,0,1],[1,1,0],[1,1,1]]})");
  CHECK(run("analyze " + fano).status == 2);

  const std::string f39p = temp_path("ex39p.json");
  write_text_file(f39p, canonical_json(support::columns(PrimeField(101), support::g39)));
  auto d = run("distance " + f39p + " -a 1 --method both");
  CHECK(d.status == 0);
  CHECK(d.out.find('3') != std::string::npos);
  CHECK(run("distance " + f34 + " -a 1 --method enum").status == 2);
  CHECK(run("distance " + f34 + " -a 2 --method subset").status == 0);
  CHECK(run("bounds " + f34 + " -a 1").status == 0);
  CHECK(run("profile " + f34).status == 0);

  const std::string out = temp_path("split.json");
  CHECK(run("construct split --k 4 --field 101 --seed 2024 --out " + out).status == 0);
  auto split = to_point_set(read_point_set_file(out), PrimeField(101));
  CHECK(split.size() == 10);
  auto c2 = run("construct split --k 4 --field 101 --seed 2024");
  CHECK(c2.status == 0);
  CHECK(c2.out == read_text_file(out));
  CHECK(run("construct example --id 4.2 --field 101").status == 1);
  CHECK(run("construct example --id 4.2 --field 103").status == 0);
  CHECK(run("construct conic --field 5 --seed 1").status == 1);
  CHECK(run("construct beta-extremal --k 3 --m 4 --ell 1 --field Q --seed 1").status == 2);
  CHECK(run("construct nonsense").status == 2);

  CHECK(run("verify-paper --only 3.9").status == 0);
  CHECK(run("verify-paper --only bogus").status == 2);
  CHECK(run("fuzz --trials 10 --k 3 --n 8 --field 101 --seed 7").status == 0);
  CHECK(run("fuzz --trials 1 --n 2000 --seed 1").status == 2);
  CHECK(run("no-such-command").status == 2);
}
