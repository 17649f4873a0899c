#include "evalcode/report.hpp"

#include <chrono>

#include "evalcode/geometry.hpp"
#include "evalcode/io.hpp"

namespace evalcode {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

nlohmann::json verdict_json(const SocleBoundResult& t) {
  nlohmann::json j = {{"verdict", to_string(t.kind)}, {"bound", t.bound}, {"d", t.d}};
  if (t.kind == VerdictKind::small_case) j["bound_met"] = t.bound_met_in_small_case;
  if (!t.reason.empty()) j["reason"] = t.reason;
  return j;
}

nlohmann::json verdict_json(const ResidueResult& p) {
  nlohmann::json j = {{"verdict", to_string(p.kind)}};
  if (p.kind == VerdictKind::holds) j["u"] = p.u;
  if (!p.reason.empty()) j["reason"] = p.reason;
  return j;
}

}  // namespace

template <ExactField F>
nlohmann::json form_json(const PolyVec<F>& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.field.is_zero(f.coeffs[i])) continue;
    auto e = f.basis->exponent(i);
    terms.push_back({{"coeff", scalar_json(f.field, f.coeffs[i])},
                     {"exponent", std::vector<std::size_t>(e.begin(), e.end())}});
  }
  return {{"degree", f.degree()}, {"terms", std::move(terms)}};
}

template <ExactField F>
nlohmann::json code_summary_json(const CodeSummary<F>& c) {
  return {{"a", c.a},
          {"n", c.n},
          {"dim", c.dim},
          {"d", c.d},
          {"hyp", c.hyp},
          {"witness", c.witness},
          {"witness_form", form_json(c.witness_form)}};
}

nlohmann::json invariants_json(const InvariantReport& inv) {
  nlohmann::json j = {{"hilbert_function", inv.hf.values},
                      {"alpha", inv.alpha},
                      {"reg", inv.reg},
                      {"socle_dims", inv.socle_dims},
                      {"s", inv.s},
                      {"separator_degrees", inv.separator_degrees}};
  j["v"] = inv.v ? nlohmann::json(*inv.v) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json bound_report_json(const BoundReport& r) {
  nlohmann::json j = {{"a", r.a},
                      {"alpha", r.alpha},
                      {"s", r.s},
                      {"k", r.k},
                      {"d", r.d},
                      {"beta_prime", r.beta_prime},
                      {"singleton_upper", r.singleton_upper},
                      {"glp", r.glp},
                      {"comparison", r.comparison},
                      {"socle_bound", verdict_json(r.socle_bound)},
                      {"residue", verdict_json(r.residue)},
                      {"consistent", r.consistent},
                      {"problems", r.problems}};
  j["beta"] = r.beta ? nlohmann::json(*r.beta) : nlohmann::json("trivial");
  return j;
}

template <ExactField F>
nlohmann::json analyze_report(const PointSet<F>& X, const AnalyzeOptions& opts) {
  nlohmann::json timing;
  auto t0 = Clock::now();
  auto inv = analyze_invariants(X, opts.seed);
  timing["invariants_us"] = micros_since(t0);

  t0 = Clock::now();
  nlohmann::json position = {{"rank", rank_of(X)},
                             {"general_linear_position", is_general_linear_position(X)},
                             {"generic_position", is_generic_position(X)}};
  position["uniform_position"] = X.size() <= opts.uniform_cap
                                     ? nlohmann::json(is_uniform_position(X, opts.uniform_cap))
                                     : nlohmann::json("not checked");
  timing["position_us"] = micros_since(t0);

  t0 = Clock::now();
  std::size_t top = inv.reg;
  if (opts.max_degree) top = std::min(top, *opts.max_degree);
  std::vector<CodeSummary<F>> codes;
  for (std::size_t a = 1; a <= top; ++a) codes.push_back(min_distance(X, a, opts.search));
  auto profile = distance_profile(X, inv, codes);
  timing["distance_us"] = micros_since(t0);

  nlohmann::json degrees = nlohmann::json::array();
  for (std::size_t i = 0; i < codes.size(); ++i) {
    degrees.push_back({{"code", code_summary_json(codes[i])},
                       {"bounds", bound_report_json(profile.entries[i].bounds)}});
  }
  nlohmann::json d_values = nlohmann::json::array();
  for (const auto& e : profile.entries) d_values.push_back(e.d);

  nlohmann::json report = {{"schema", report_schema},
                           {"input", point_set_json(X)},
                           {"n", X.size()},
                           {"invariants", invariants_json(inv)},
                           {"position", std::move(position)},
                           {"degrees", std::move(degrees)},
                           {"profile",
                            {{"d", std::move(d_values)},
                             {"monotone", profile.monotone},
                             {"problems", profile.problems}}}};
  if (opts.timing) report["timing"] = std::move(timing);
  return report;
}

#define EVALCODE_INSTANTIATE(F)                                         \
  template nlohmann::json form_json(const PolyVec<F>&);                 \
  template nlohmann::json code_summary_json(const CodeSummary<F>&);     \
  template nlohmann::json analyze_report(const PointSet<F>&, const AnalyzeOptions&);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
