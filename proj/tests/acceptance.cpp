// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "evalcode/constructions.hpp"
#include "evalcode/fuzz.hpp"
#include "evalcode/io.hpp"
#include "evalcode/verify.hpp"

using namespace evalcode;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::size_t threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// The fixture file and the built-in coordinates describe the same set in both fields.
bool fixture_matches(const std::string& file, const std::string& id, std::uint32_t p) {
  try {
    auto f = read_point_set_file(std::string(EVALCODE_FIXTURE_DIR) + "/" + file);
    if (to_point_set(f, RationalField{}) != published_example_unchecked(id, RationalField{}).X)
      return false;
    return to_point_set(f, PrimeField(p)) == published_example_unchecked(id, PrimeField(p)).X;
  } catch (const Error&) {
    return false;
  }
}

Outcome table(const std::string& group, const char* fixture = nullptr, std::uint32_t p = 0) {
  Outcome o;
  SearchOptions opts;
  opts.threads = threads();
  std::size_t bad = 0;
  std::vector<CheckRow> rows;
  try {
    rows = verify_published(group, opts);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  for (const auto& r : rows) {
    if (r.ok) continue;
    ++bad;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.setting + " " + r.name + ": expected " + r.expected + ", computed " + r.computed;
  }
  o.ok = bad == 0 && !rows.empty();
  std::string summary = std::to_string(rows.size()) + " checks, " + std::to_string(bad) +
                        " mismatches";
  if (fixture) {
    const bool same = fixture_matches(fixture, group, p);
    o.ok = o.ok && same;
    summary += same ? ", fixture agrees" : ", fixture differs";
  }
  o.detail = o.detail.empty() ? summary : summary + " (" + o.detail + ")";
  return o;
}

Outcome fuzz_suite() {
  Outcome o;
  std::size_t sets = 0, glp = 0, checked = 0;
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 8}, {4, 10}}) {
    FuzzOptions f;
    f.trials = 200;
    f.seed = 7;
    f.k = k;
    f.n = n;
    f.p = 101;
    f.threads = threads();
    auto r = run_fuzz(f);
    sets += r.trials;
    glp += r.glp_trials;
    for (const auto& t : r.properties) {
      checked += t.checked;
      if (t.checked == 0) {
        o.ok = false;
        o.detail += " property (" + t.id + ") unexercised at k=" + std::to_string(k) + ";";
      }
    }
    for (const auto& v : r.violations) {
      o.ok = false;
      o.detail += " k=" + std::to_string(k) + " trial " + std::to_string(v.trial) + " (" +
                  v.property + "): " + v.detail + ";";
    }
  }
  o.detail = std::to_string(sets) + " sets (" + std::to_string(glp) + " in general linear position), " +
             std::to_string(checked) + " property checks" + o.detail;
  return o;
}

Outcome mds_suite() {
  auto r = run_mds_check(verify_seed);
  Outcome o;
  o.ok = r.ok() && r.glp_sets >= 10 && r.uniform_sets > 0;
  o.detail = std::to_string(r.glp_sets) + " general-position sets, " +
             std::to_string(r.uniform_sets) + " uniform sets, " + std::to_string(r.checks) +
             " checks, " + std::to_string(r.violations.size()) + " violations";
  for (const auto& v : r.violations) o.detail += "; " + v;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "ten points with alpha 4, profile 6 3 1",
       [] { return table("3.4", "example_3_4.json", 101); }},
      {2, "seven points with d_1 = beta_1 = beta'_1 = 3",
       [] { return table("3.9", "example_3_9.json", 101); }},
      {3, "spanning simplex k = 3, 4, 5", [] { return table("3.6"); }},
      {4, "split configuration k = 3, 4 over F_101", [] { return table("3.8"); }},
      {5, "ten points of P^3 in general linear position, F_101 boundary",
       [] { return table("4.2", "example_4_2.json", 103); }},
      {6, "fifteen generic points with alpha 5", [] { return table("5.2", "example_5_2.json", 101); }},
      {7, "conic configuration over F_1009 attaining the socle bound", [] { return table("5.3"); }},
      {8, "beta-extremal configuration k = 3, m = 4, ell = 4", [] { return table("5.1"); }},
      {9, "randomized property suite over F_101", fuzz_suite},
      {10, "MDS and uniform position checks", mds_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("criterion %2d %s  %s: %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
