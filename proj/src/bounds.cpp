#include "evalcode/bounds.hpp"

#include <algorithm>

#include "evalcode/combinatorics.hpp"
#include "evalcode/error.hpp"
#include "evalcode/geometry.hpp"

namespace evalcode {

std::int64_t beta(std::int64_t alpha, std::int64_t k, std::int64_t a) {
  if (k < 3) throw Error(ErrorCode::out_of_range, "beta needs k >= 3");
  if (a < 1 || a > alpha - 1) {
    throw Error(ErrorCode::out_of_range, "beta needs 1 <= a <= alpha - 1 (a = " +
                                             std::to_string(a) +
                                             ", alpha = " + std::to_string(alpha) + ")");
  }
  return static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(alpha - 1 - a + k - 1),
                                            static_cast<std::uint64_t>(k - 1)));
}

std::int64_t beta_prime(std::int64_t alpha, std::int64_t k, std::int64_t a) {
  if (a >= alpha) return 1;  // d >= 1 holds for every nonzero code
  return (k - 1) * (alpha - 1 - a) + 1;
}

const char* to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::inapplicable: return "Inapplicable";
    case VerdictKind::holds: return "BoundHolds";
    case VerdictKind::small_case: return "SmallCase";
    case VerdictKind::violation: return "VIOLATION";
  }
  return "?";
}

ResidueResult residue_verdict(std::int64_t k, std::int64_t alpha, std::int64_t a, std::int64_t d,
                            bool rank_full) {
  ResidueResult out;
  if (k < 3) {
    out.reason = "k < 3";
    return out;
  }
  if (!rank_full) {
    out.reason = "points lie in a hyperplane";
    return out;
  }
  if (a < 1 || a > alpha - 1) {
    out.reason = "a outside 1 .. alpha-1";
    return out;
  }
  const std::int64_t target = (k - 1) * (alpha - a);
  for (std::int64_t u = 0; u <= k - 2; ++u) {
    if (d + u >= target) {
      out.kind = VerdictKind::holds;
      out.u = u;
      return out;
    }
  }
  out.kind = VerdictKind::violation;
  out.reason = "no u in 0..k-2 with d + u >= " + std::to_string(target);
  return out;
}

template <ExactField F>
ResidueResult residue_check(const PointSet<F>& X, std::size_t a, const SearchOptions& opts) {
  const auto k = static_cast<std::int64_t>(X.k());
  const bool full = rank_of(X) == X.k();
  const auto al = static_cast<std::int64_t>(alpha(X));
  const auto ia = static_cast<std::int64_t>(a);
  if (k < 3 || !full || ia < 1 || ia > al - 1) return residue_verdict(k, al, ia, 0, full);
  const auto d = static_cast<std::int64_t>(min_distance(X, a, opts).d);
  return residue_verdict(k, al, ia, d, full);
}

SocleBoundResult socle_bound_verdict(std::int64_t n, std::int64_t k, bool glp, std::int64_t a,
                          std::int64_t s, std::int64_t d) {
  SocleBoundResult out;
  out.d = d;
  out.bound = (k - 1) * (s - 1 - a) + 2;
  if (k < 3 || n < k) {
    out.reason = "needs n >= k >= 3";
    return out;
  }
  if (a < 1 || a > s - 1) {
    out.reason = "a outside 1 .. s-1";
    return out;
  }
  if (!glp) {
    out.reason = "not in general linear position";
    return out;
  }
  if (d <= k - 1) {
    out.kind = VerdictKind::small_case;
    out.bound_met_in_small_case = d >= out.bound;
  } else if (d >= out.bound) {
    out.kind = VerdictKind::holds;
  } else {
    out.kind = VerdictKind::violation;
    out.reason = "k-1 < d < bound";
  }
  return out;
}

template <ExactField F>
SocleBoundResult socle_bound_check(const PointSet<F>& X, std::size_t a, std::size_t s,
                        const SearchOptions& opts) {
  const auto n = static_cast<std::int64_t>(X.size());
  const auto k = static_cast<std::int64_t>(X.k());
  const auto ia = static_cast<std::int64_t>(a);
  const auto is = static_cast<std::int64_t>(s);
  if (k < 3 || n < k || ia < 1 || ia > is - 1) return socle_bound_verdict(n, k, false, ia, is, 0);
  const bool glp = is_general_linear_position(X);
  if (!glp) return socle_bound_verdict(n, k, false, ia, is, 0);
  const auto d = static_cast<std::int64_t>(min_distance(X, a, opts).d);
  return socle_bound_verdict(n, k, true, ia, is, d);
}

BoundReport make_bound_report(const BoundInputs& in, std::size_t a, std::size_t d,
                              std::size_t dim) {
  BoundReport r;
  r.a = a;
  r.alpha = in.alpha;
  r.s = in.s;
  r.k = in.k;
  r.n = in.n;
  r.d = d;
  r.dim = dim;
  r.glp = in.glp;
  r.rank_full = in.rank_full;
  r.singleton_upper = in.n - dim + 1;

  const auto k = static_cast<std::int64_t>(in.k);
  const auto al = static_cast<std::int64_t>(in.alpha);
  const auto ia = static_cast<std::int64_t>(a);
  const auto id = static_cast<std::int64_t>(d);
  r.beta_prime = beta_prime(al, k, ia);
  if (k >= 3 && ia >= 1 && ia <= al - 1) r.beta = beta(al, k, ia);

  if (!r.beta) {
    r.comparison = "trivial";
  } else {
    r.comparison = *r.beta > r.beta_prime ? "beta > beta_prime" : "beta = beta_prime";
  }

  r.socle_bound = socle_bound_verdict(static_cast<std::int64_t>(in.n), k, in.glp, ia,
                          static_cast<std::int64_t>(in.s), id);
  r.residue = residue_verdict(k, al, ia, id, in.rank_full);

  auto problem = [&](std::string text) {
    r.consistent = false;
    r.problems.push_back(std::move(text));
  };
  if (d > r.singleton_upper) problem("d exceeds the Singleton bound");
  if (in.rank_full && a >= 1 && id < r.beta_prime) problem("d < beta_prime");
  if (r.beta) {
    if (in.rank_full && id < *r.beta) problem("d < beta");
    if (*r.beta < r.beta_prime) problem("beta < beta_prime");
    const bool equal = *r.beta == r.beta_prime;
    const bool predicted = al == ia + 1 || al == ia + 2;
    if (equal != predicted) problem("beta = beta_prime disagrees with alpha in {a+1, a+2}");
  }
  if (r.socle_bound.kind == VerdictKind::violation) problem("socle bound dichotomy violated");
  if (r.residue.kind == VerdictKind::violation) problem("no residue u in 0..k-2");
  return r;
}

template <ExactField F>
BoundInputs bound_inputs(const PointSet<F>& X, const InvariantReport& inv) {
  BoundInputs in;
  in.n = X.size();
  in.k = X.k();
  in.alpha = inv.alpha;
  in.s = inv.s;
  in.rank_full = rank_of(X) == X.k();
  in.glp = X.size() >= X.k() && is_general_linear_position(X);
  return in;
}

template <ExactField F>
BoundReport bound_report(const PointSet<F>& X, std::size_t a, const SearchOptions& opts) {
  if (a < 1) throw Error(ErrorCode::precondition, "code order a must be >= 1");
  auto inv = analyze_invariants(X);
  auto code = min_distance(X, a, opts);
  return make_bound_report(bound_inputs(X, inv), a, code.d, code.dim);
}

template <ExactField F>
DistanceProfile distance_profile(const PointSet<F>& X, const InvariantReport& inv,
                                 const std::vector<CodeSummary<F>>& codes) {
  DistanceProfile out;
  out.v = inv.v;
  const auto in = bound_inputs(X, inv);
  for (const auto& c : codes) {
    out.entries.push_back({c.a, c.d, c.hyp, make_bound_report(in, c.a, c.d, c.dim)});
  }
  auto problem = [&](std::string text) {
    out.monotone = false;
    out.problems.push_back(std::move(text));
  };
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    const auto& e = out.entries[i];
    if (!inv.v) break;
    if (e.a < *inv.v) {
      if (e.d <= 1) problem("d_" + std::to_string(e.a) + " = 1 before v");
      if (i + 1 < out.entries.size() && out.entries[i + 1].d >= e.d) {
        problem("d_" + std::to_string(e.a + 1) + " >= d_" + std::to_string(e.a));
      }
    } else if (e.d != 1) {
      problem("d_" + std::to_string(e.a) + " != 1 at or after v");
    }
  }
  return out;
}

template <ExactField F>
DistanceProfile distance_profile(const PointSet<F>& X, const SearchOptions& opts,
                                 std::optional<std::size_t> max_degree) {
  auto inv = analyze_invariants(X);
  std::size_t top = inv.reg;
  if (max_degree) top = std::min(top, *max_degree);
  std::vector<CodeSummary<F>> codes;
  for (std::size_t a = 1; a <= top; ++a) codes.push_back(min_distance(X, a, opts));
  return distance_profile(X, inv, codes);
}

#define EVALCODE_INSTANTIATE(F)                                                              \
  template ResidueResult residue_check(const PointSet<F>&, std::size_t, const SearchOptions&); \
  template SocleBoundResult socle_bound_check(const PointSet<F>&, std::size_t, std::size_t,             \
                                   const SearchOptions&);                                    \
  template BoundInputs bound_inputs(const PointSet<F>&, const InvariantReport&);             \
  template BoundReport bound_report(const PointSet<F>&, std::size_t, const SearchOptions&);  \
  template DistanceProfile distance_profile(const PointSet<F>&, const InvariantReport&,      \
                                            const std::vector<CodeSummary<F>>&);            \
  template DistanceProfile distance_profile(const PointSet<F>&, const SearchOptions&,        \
                                            std::optional<std::size_t>);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
