#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "evalcode/bounds.hpp"
#include "evalcode/constructions.hpp"
#include "evalcode/distance.hpp"
#include "evalcode/error.hpp"
#include "evalcode/fuzz.hpp"
#include "evalcode/io.hpp"
#include "evalcode/report.hpp"
#include "evalcode/verify.hpp"

using namespace evalcode;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct Common {
  std::size_t threads = 1;
  bool force = false;
  std::optional<std::uint64_t> seed;

  SearchOptions search() const {
    SearchOptions s;
    s.threads = threads == 0 ? 1 : threads;
    s.force = force;
    return s;
  }
  std::uint64_t seed_or_clock() const {
    if (seed) return *seed;
    const auto t = static_cast<std::uint64_t>(
        std::chrono::system_clock::now().time_since_epoch().count());
    std::cerr << "seed: " << t << "\n";
    return t;
  }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

FieldSpec parse_field_option(const std::string& text) {
  if (text == "Q" || text == "rational") return FieldSpec::rationals();
  std::uint64_t p = 0;
  try {
    std::size_t pos = 0;
    p = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "field must be a prime or Q, got '" + text + "'");
  }
  return FieldSpec::prime(p);
}

// Loads a point set file and hands the typed point set to fn.
template <class Fn>
int with_file(const std::string& path, Fn&& fn) {
  auto file = read_point_set_file(path);
  return with_field(file.field, [&](const auto& field) { return fn(to_point_set(file, field)); });
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::certificate_mismatch:
    case ErrorCode::construction_failed:
    case ErrorCode::internal:
      return exit_failure;
    default:
      return exit_usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluation codes of finite point sets: parameters, invariants and bounds"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* cmd, bool seeded) {
    cmd->add_option("--threads", common.threads, "worker threads (output does not depend on it)");
    cmd->add_flag("--force", common.force, "lift the subset-search size cap");
    if (seeded) cmd->add_option("--seed", common.seed, "random seed");
  };

  std::string file;
  std::optional<std::size_t> max_degree;
  bool no_timing = false;
  std::uint64_t nzd_seed = 0;
  auto* analyze = app.add_subcommand("analyze", "full report for a point set file");
  analyze->add_option("file", file, "point set JSON")->required();
  analyze->add_option("--max-degree", max_degree, "highest code order in the profile");
  analyze->add_option("--nzd-seed", nzd_seed, "choice of the linear non-zerodivisor");
  analyze->add_flag("--no-timing", no_timing, "omit timings so output is reproducible");
  add_common(analyze, false);

  std::size_t degree = 1;
  std::string method = "subset";
  auto* distance = app.add_subcommand("distance", "minimum distance of C(X)_a");
  distance->add_option("file", file, "point set JSON")->required();
  distance->add_option("--degree,-a", degree, "code order a >= 1")->required();
  distance->add_option("--method", method, "subset, enum or both")
      ->check(CLI::IsMember({"subset", "enum", "both"}));
  add_common(distance, false);

  auto* bounds = app.add_subcommand("bounds", "bound report for one code order");
  bounds->add_option("file", file, "point set JSON")->required();
  bounds->add_option("--degree,-a", degree, "code order a >= 1")->required();
  add_common(bounds, false);

  auto* profile = app.add_subcommand("profile", "distance profile a = 1 .. reg(X)");
  profile->add_option("file", file, "point set JSON")->required();
  profile->add_option("--max-degree", max_degree, "highest code order");
  add_common(profile, false);

  ConstructionSpec cspec;
  std::string field_text = "Q";
  std::optional<std::string> out_path;
  std::optional<std::int64_t> pk, pm, pell, pn;
  auto* construct_cmd = app.add_subcommand("construct", "build a certified configuration");
  construct_cmd->add_option("name", cspec.name, "construction")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  construct_cmd->add_option("--id", cspec.example, "example id for 'example'");
  construct_cmd->add_option("--k", pk, "number of coordinates");
  construct_cmd->add_option("--m", pm, "target initial degree (beta-extremal)");
  construct_cmd->add_option("--ell", pell, "points on the hyperplane (beta-extremal)");
  construct_cmd->add_option("--n", pn, "number of points (random, random-glp)");
  construct_cmd->add_option("--field", field_text, "prime p or Q");
  construct_cmd->add_option("--max-retries", cspec.max_retries, "resampling budget");
  construct_cmd->add_option("--out,-o", out_path, "write the point set here instead of stdout");
  add_common(construct_cmd, true);

  std::optional<std::string> only;
  auto* verify = app.add_subcommand("verify-paper", "reproduce the published example table");
  verify->add_option("--only", only, "run a single example id");
  add_common(verify, false);

  FuzzOptions fopts;
  std::optional<std::string> reproducer_dir;
  auto* fuzz = app.add_subcommand("fuzz", "property suite on random point sets over F_p");
  fuzz->add_option("--trials", fopts.trials, "number of random sets");
  fuzz->add_option("--k", fopts.k, "number of coordinates");
  fuzz->add_option("--n", fopts.n, "largest set size");
  fuzz->add_option("--field", fopts.p, "prime modulus");
  fuzz->add_option("--reproducer-dir", reproducer_dir, "directory for offending point sets");
  add_common(fuzz, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*analyze) {
      return with_file(file, [&](const auto& X) {
        AnalyzeOptions opts;
        opts.search = common.search();
        opts.max_degree = max_degree;
        opts.seed = nzd_seed;
        opts.timing = !no_timing;
        auto report = analyze_report(X, opts);
        print_json(report);
        return report["profile"]["monotone"].template get<bool>() ? exit_ok : exit_failure;
      });
    }
    if (*distance) {
      return with_file(file, [&](const auto& X) {
        if (degree < 1) throw Error(ErrorCode::precondition, "--degree must be >= 1");
        nlohmann::json out = {{"a", degree}, {"n", X.size()}, {"method", method}};
        std::optional<std::size_t> d_subset, d_enum;
        if (method != "enum") {
          auto c = min_distance(X, degree, common.search());
          d_subset = c.d;
          out["subset"] = code_summary_json(c);
        }
        if (method != "subset") {
          d_enum = min_distance_enum(X, degree);
          out["enumeration"] = {{"d", *d_enum}};
        }
        out["d"] = d_subset ? *d_subset : *d_enum;
        int code = exit_ok;
        if (d_subset && d_enum) {
          out["agree"] = *d_subset == *d_enum;
          if (*d_subset != *d_enum) code = exit_failure;
        }
        print_json(out);
        return code;
      });
    }
    if (*bounds) {
      return with_file(file, [&](const auto& X) {
        auto r = bound_report(X, degree, common.search());
        print_json(bound_report_json(r));
        return r.consistent ? exit_ok : exit_failure;
      });
    }
    if (*profile) {
      return with_file(file, [&](const auto& X) {
        auto p = distance_profile(X, common.search(), max_degree);
        nlohmann::json entries = nlohmann::json::array();
        bool consistent = p.monotone;
        for (const auto& e : p.entries) {
          entries.push_back({{"a", e.a}, {"d", e.d}, {"hyp", e.hyp},
                             {"bounds", bound_report_json(e.bounds)}});
          consistent = consistent && e.bounds.consistent;
        }
        nlohmann::json out = {{"schema", report_schema},
                              {"entries", std::move(entries)},
                              {"monotone", p.monotone},
                              {"problems", p.problems}};
        out["v"] = p.v ? nlohmann::json(*p.v) : nlohmann::json(nullptr);
        print_json(out);
        return consistent ? exit_ok : exit_failure;
      });
    }
    if (*construct_cmd) {
      if (pk) cspec.params["k"] = *pk;
      if (pm) cspec.params["m"] = *pm;
      if (pell) cspec.params["ell"] = *pell;
      if (pn) cspec.params["n"] = *pn;
      const bool randomized = cspec.name != "example" && cspec.name != "simplex";
      cspec.seed = randomized ? common.seed_or_clock() : 0;
      return with_field(parse_field_option(field_text), [&](const auto& field) {
        auto r = construct(cspec, field, common.search());
        for (const auto& e : r.certificate.entries) {
          std::cerr << (e.ok ? "ok   " : "FAIL ") << e.name << ": expected " << e.expected
                    << ", computed " << e.computed << "\n";
        }
        if (randomized) std::cerr << "attempts: " << r.attempts << "\n";
        const auto text = canonical_json(r.X);
        if (out_path) {
          write_text_file(*out_path, text);
        } else {
          std::cout << text;
        }
        return r.certificate.ok() ? exit_ok : exit_failure;
      });
    }
    if (*verify) {
      auto rows = verify_published(only, common.search());
      std::size_t failed = 0;
      std::printf("%-6s %-26s %-32s %-20s %-20s %s\n", "id", "setting", "check", "expected",
                  "computed", "status");
      for (const auto& r : rows) {
        if (!r.ok) ++failed;
        std::printf("%-6s %-26s %-32s %-20s %-20s %s\n", r.group.c_str(), r.setting.c_str(),
                    r.name.c_str(), r.expected.c_str(), r.computed.c_str(),
                    r.ok ? "ok" : "MISMATCH");
      }
      std::printf("%zu checks, %zu mismatches\n", rows.size(), failed);
      return failed == 0 ? exit_ok : exit_failure;
    }
    if (*fuzz) {
      fopts.seed = common.seed_or_clock();
      fopts.threads = common.threads == 0 ? 1 : common.threads;
      fopts.reproducer_dir = reproducer_dir.value_or(".");
      auto r = run_fuzz(fopts);
      std::printf("trials %zu (general linear position: %zu), k = %zu, n <= %zu, F_%llu, seed %llu\n",
                  r.trials, r.glp_trials, fopts.k, fopts.n,
                  static_cast<unsigned long long>(fopts.p),
                  static_cast<unsigned long long>(fopts.seed));
      for (const auto& p : r.properties) {
        std::printf("  (%s) %-66s checked %5zu  violations %zu\n", p.id.c_str(),
                    p.description.c_str(), p.checked, p.violations);
      }
      for (const auto& v : r.violations) {
        std::printf("VIOLATION trial %zu (%s): %s%s%s\n", v.trial, v.property.c_str(),
                    v.detail.c_str(), v.reproducer.empty() ? "" : " -> ",
                    v.reproducer.c_str());
      }
      return r.ok() ? exit_ok : exit_failure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
