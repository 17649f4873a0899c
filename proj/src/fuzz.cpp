#include "evalcode/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <set>
#include <thread>

#include "evalcode/bounds.hpp"
#include "evalcode/constructions.hpp"
#include "evalcode/error.hpp"
#include "evalcode/geometry.hpp"
#include "evalcode/invariants.hpp"
#include "evalcode/io.hpp"
#include "evalcode/rng.hpp"

namespace evalcode {

namespace {

struct Property {
  const char* id;
  const char* description;
};

constexpr Property properties[] = {
    {"i", "HF nondecreasing and stabilizes at n"},
    {"ii", "reg >= v >= s >= alpha - 1"},
    {"iii", "d >= beta >= beta' for 1 <= a <= alpha - 1"},
    {"iv", "residue u exists in 0..k-2"},
    {"v", "distance profile strictly decreasing to 1 at a = v, then constant"},
    {"vi", "socle bound dichotomy on general linear position sets"},
    {"vii", "subset search agrees with codeword enumeration"},
    {"viii", "d(X)_a = n - hyp of the Veronese image"},
    {"ix", "s(X) independent of the non-zerodivisor"},
};
constexpr std::size_t property_count = std::size(properties);

struct TrialOutcome {
  std::vector<std::size_t> checked = std::vector<std::size_t>(property_count, 0);
  std::vector<std::pair<std::size_t, std::string>> failures;  // property index, detail
  bool glp = false;
  std::string point_set;
};

// Points with coordinates in {0, 1, 2}: many collinear triples and conic coincidences.
PointSet<PrimeField> small_coordinate_points(std::size_t k, std::size_t n, const PrimeField& f,
                                             Rng& rng) {
  std::vector<std::vector<PrimeField::value_type>> rows;
  std::set<std::vector<PrimeField::value_type>> seen;
  for (std::size_t tries = 0; rows.size() < n && tries < 10000; ++tries) {
    std::vector<PrimeField::value_type> v(k);
    for (auto& c : v) c = f.from_int(static_cast<std::int64_t>(rng.below(3)));
    if (std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; })) continue;
    auto p = normalize<PrimeField>(std::span<const PrimeField::value_type>(v), f);
    std::vector<PrimeField::value_type> key(p.coords().begin(), p.coords().end());
    if (seen.insert(key).second) rows.push_back(std::move(key));
  }
  if (rows.size() < n) throw Error(ErrorCode::construction_failed, "not enough small points");
  return point_set(f, k, rows);
}

PointSet<PrimeField> trial_points(const FuzzOptions& opts, const PrimeField& f, std::size_t trial) {
  const auto seed = derive_seed(opts.seed, trial);
  Rng rng(seed);
  const auto n = opts.k + static_cast<std::size_t>(rng.below(opts.n - opts.k + 1));
  try {
    switch (trial % 3) {
      case 1: return small_coordinate_points(opts.k, n, f, rng);
      case 2: return random_glp_points(opts.k, n, f, rng.next(), 8);
      default: break;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::construction_failed) throw;
  }
  return random_points(opts.k, n, f, rng.next());
}

TrialOutcome run_trial(const FuzzOptions& opts, const PrimeField& f, std::size_t trial) {
  TrialOutcome out;
  auto X = trial_points(opts, f, trial);
  out.point_set = canonical_json(X);
  const SearchOptions search;
  const std::size_t n = X.size();
  const std::size_t k = X.k();
  auto fail = [&](std::size_t prop, std::string detail) {
    out.failures.emplace_back(prop, std::move(detail));
  };
  auto guard = [&](std::size_t prop, const std::function<void()>& body) {
    ++out.checked[prop];
    try {
      body();
    } catch (const std::exception& e) {
      fail(prop, std::string("exception: ") + e.what());
    }
  };

  std::optional<InvariantReport> inv;
  guard(0, [&] {
    inv = analyze_invariants(X, derive_seed(opts.seed, trial) ^ 0x51);
    const auto& hf = inv->hf.values;
    if (hf.front() != 1) fail(0, "HF(0) != 1");
    for (std::size_t i = 1; i < hf.size(); ++i) {
      if (hf[i] < hf[i - 1]) fail(0, "HF decreases at degree " + std::to_string(i));
    }
    if (hf.back() != n) fail(0, "HF(reg) != n");
    if (hilbert_function(X, inv->reg + 1) != n) fail(0, "HF(reg + 1) != n");
  });
  if (!inv) return out;

  if (n >= 2) {
    guard(1, [&] {
      if (!inv->v) return fail(1, "v missing");
      const auto v = *inv->v;
      if (!(inv->reg >= v && v >= inv->s && inv->s + 1 >= inv->alpha)) {
        fail(1, "reg " + std::to_string(inv->reg) + ", v " + std::to_string(v) + ", s " +
                    std::to_string(inv->s) + ", alpha " + std::to_string(inv->alpha));
      }
    });
  }

  std::vector<CodeSummary<PrimeField>> codes;
  for (std::size_t a = 1; a <= inv->reg; ++a) codes.push_back(min_distance(X, a, search));
  const auto inputs = bound_inputs(X, *inv);
  out.glp = inputs.glp;

  for (const auto& c : codes) {
    const auto r = make_bound_report(inputs, c.a, c.d, c.dim);
    const auto as = "a = " + std::to_string(c.a) + ": ";
    if (k >= 3 && inputs.rank_full && c.a + 1 <= inv->alpha) {
      guard(2, [&] {
        const auto d = static_cast<std::int64_t>(c.d);
        if (!r.beta) return fail(2, as + "beta missing");
        if (!(d >= *r.beta && *r.beta >= r.beta_prime)) {
          fail(2, as + "d " + std::to_string(d) + ", beta " + std::to_string(*r.beta) +
                      ", beta' " + std::to_string(r.beta_prime));
        }
        const bool equal = *r.beta == r.beta_prime;
        const bool predicted = inv->alpha == c.a + 1 || inv->alpha == c.a + 2;
        if (equal != predicted) fail(2, as + "beta = beta' disagrees with alpha in {a+1, a+2}");
      });
      guard(3, [&] {
        if (r.residue.kind != VerdictKind::holds) fail(3, as + r.residue.reason);
      });
    }
    if (inputs.glp && k >= 3 && c.a + 1 <= inv->s) {
      guard(5, [&] {
        if (r.socle_bound.kind == VerdictKind::violation) {
          fail(5, as + "d " + std::to_string(c.d) + " between k-1 and " +
                      std::to_string(r.socle_bound.bound));
        }
        if (r.socle_bound.kind == VerdictKind::small_case && r.socle_bound.bound_met_in_small_case &&
            c.a + 1 < inv->s) {
          fail(5, as + "small case meets the bound below a = s - 1");
        }
      });
    }
    guard(6, [&] {
      const std::uint64_t p = f.modulus();
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < c.dim && size <= default_enumeration_cap; ++i) size *= p;
      if (size > default_enumeration_cap) {
        --out.checked[6];
        return;
      }
      const auto e = min_distance_enum(X, c.a);
      if (e != c.d) {
        fail(6, as + "subset search " + std::to_string(c.d) + ", enumeration " +
                    std::to_string(e));
      }
    });
    if (n >= 2) {
      guard(7, [&] {
        auto V = span_coordinates(veronese_image(X, c.a));
        auto h = hyp_hyperplane(V, search);
        if (n - h.count != c.d) {
          fail(7, as + "Veronese gives " + std::to_string(n - h.count) + ", direct " +
                      std::to_string(c.d));
        }
      });
    }
  }

  guard(4, [&] {
    auto profile = distance_profile(X, *inv, codes);
    for (const auto& p : profile.problems) fail(4, p);
    if (inv->v) {
      std::optional<std::size_t> first_one;
      for (const auto& c : codes) {
        if (c.d == 1) {
          first_one = c.a;
          break;
        }
      }
      if (!first_one || *first_one != *inv->v) fail(4, "v is not the least a with d_a = 1");
    }
  });

  guard(8, [&] {
    const auto s1 = min_socle_degree(X, derive_seed(opts.seed, trial) ^ 0x1234);
    const auto s2 = min_socle_degree(X, derive_seed(opts.seed, trial) ^ 0xabcdef);
    if (s1 != s2 || s1 != inv->s) {
      fail(8, "s = " + std::to_string(s1) + " vs " + std::to_string(s2) + " vs " +
                  std::to_string(inv->s));
    }
  });
  return out;
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions& opts) {
  if (opts.n > fuzz_max_points) {
    throw Error(ErrorCode::precondition, "fuzzing is capped at n <= " +
                                             std::to_string(fuzz_max_points));
  }
  if (opts.k < 2 || opts.k > fuzz_max_k) {
    throw Error(ErrorCode::precondition, "fuzzing needs 2 <= k <= " + std::to_string(fuzz_max_k));
  }
  if (opts.n < opts.k) throw Error(ErrorCode::precondition, "fuzzing needs n >= k");
  const PrimeField field(opts.p);

  std::vector<std::optional<TrialOutcome>> outcomes(opts.trials);
  std::vector<std::string> errors(opts.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < opts.trials;) {
      try {
        outcomes[t] = run_trial(opts, field, t);
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.threads, opts.trials));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzReport report;
  report.trials = opts.trials;
  for (const auto& p : properties) report.properties.push_back({p.id, p.description, 0, 0});
  for (std::size_t t = 0; t < opts.trials; ++t) {
    if (!outcomes[t]) {
      report.violations.push_back({t, "setup", errors[t], "", ""});
      continue;
    }
    const auto& o = *outcomes[t];
    if (o.glp) ++report.glp_trials;
    for (std::size_t i = 0; i < property_count; ++i) report.properties[i].checked += o.checked[i];
    for (const auto& [prop, detail] : o.failures) {
      ++report.properties[prop].violations;
      report.violations.push_back({t, properties[prop].id, detail, o.point_set, ""});
    }
  }
  if (opts.reproducer_dir) {
    std::set<std::size_t> written;
    for (auto& v : report.violations) {
      if (v.point_set.empty()) continue;
      auto path = (std::filesystem::path(*opts.reproducer_dir) /
                   ("fuzz_violation_trial" + std::to_string(v.trial) + ".json"))
                      .string();
      if (written.insert(v.trial).second) write_text_file(path, v.point_set);
      v.reproducer = path;
    }
  }
  return report;
}

MdsReport run_mds_check(std::uint64_t seed, std::size_t glp_sets, std::size_t uniform_sets) {
  const PrimeField f(101);
  MdsReport report;
  for (std::size_t i = 0; i < glp_sets; ++i) {
    const std::size_t n = 4 + i % 6;
    auto X = random_glp_points(3, n, f, derive_seed(seed, i));
    ++report.glp_sets;
    ++report.checks;
    const auto d = min_distance(X, 1).d;
    if (d != n - 2) {
      report.violations.push_back("GLP set " + std::to_string(i) + ": d_1 = " +
                                  std::to_string(d) + ", expected " + std::to_string(n - 2));
    }
  }
  for (std::size_t attempt = 0; report.uniform_sets < uniform_sets && attempt < 20 * uniform_sets;
       ++attempt) {
    const std::size_t n = 3 + attempt % 6;
    auto X = random_points(3, n, f, derive_seed(seed ^ 0x75, attempt));
    if (!is_uniform_position(X, 8)) continue;
    ++report.uniform_sets;
    const auto hf = hilbert_profile(X);
    for (std::size_t a = 1; a < hf.regularity(); ++a) {
      ++report.checks;
      const auto d = min_distance(X, a).d;
      if (d != n - hf.at(a) + 1) {
        report.violations.push_back("uniform set " + std::to_string(attempt) + ", a = " +
                                    std::to_string(a) + ": d = " + std::to_string(d) +
                                    ", Singleton " + std::to_string(n - hf.at(a) + 1));
      }
    }
  }
  if (report.uniform_sets < uniform_sets) {
    report.violations.push_back("only " + std::to_string(report.uniform_sets) +
                                " uniform-position sets found");
  }
  return report;
}

}  // namespace evalcode
