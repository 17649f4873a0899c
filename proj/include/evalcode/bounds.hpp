#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evalcode/distance.hpp"
#include "evalcode/invariants.hpp"
#include "evalcode/point_set.hpp"

namespace evalcode {

// C(alpha-1-a+k-1, k-1); OutOfRange unless 1 <= a <= alpha-1 and k >= 3.
std::int64_t beta(std::int64_t alpha, std::int64_t k, std::int64_t a);

// (k-1)(alpha-1-a)+1 for a <= alpha-1; for a >= alpha the bound is trivial and 0 is returned.
std::int64_t beta_prime(std::int64_t alpha, std::int64_t k, std::int64_t a);

enum class VerdictKind { inapplicable, holds, small_case, violation };

const char* to_string(VerdictKind kind) noexcept;

struct ResidueResult {
  VerdictKind kind = VerdictKind::inapplicable;
  std::int64_t u = 0;  // smallest u in {0..k-2} with d + u >= (k-1)(alpha-a)
  std::string reason;
};

// Pure arithmetic form: the caller supplies d and alpha; rank_full is rank_of(X) == k.
ResidueResult residue_verdict(std::int64_t k, std::int64_t alpha, std::int64_t a, std::int64_t d,
                            bool rank_full);

template <ExactField F>
ResidueResult residue_check(const PointSet<F>& X, std::size_t a, const SearchOptions& opts = {});

struct SocleBoundResult {
  VerdictKind kind = VerdictKind::inapplicable;
  std::int64_t bound = 0;  // (k-1)(s-1-a)+2
  std::int64_t d = 0;
  // small case in which d >= bound still holds (recorded, never asserted)
  bool bound_met_in_small_case = false;
  std::string reason;
};

// Either d <= k-1 or d >= (k-1)(s-1-a)+2, for X in general linear position.
SocleBoundResult socle_bound_verdict(std::int64_t n, std::int64_t k, bool glp, std::int64_t a,
                          std::int64_t s, std::int64_t d);

template <ExactField F>
SocleBoundResult socle_bound_check(const PointSet<F>& X, std::size_t a, std::size_t s,
                        const SearchOptions& opts = {});

struct BoundReport {
  std::size_t a = 0;
  std::size_t alpha = 0;
  std::size_t s = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t dim = 0;
  std::optional<std::int64_t> beta;  // absent (trivial) unless 1 <= a <= alpha-1
  std::int64_t beta_prime = 0;
  std::size_t singleton_upper = 0;  // n - HF(a) + 1
  bool glp = false;
  bool rank_full = false;
  SocleBoundResult socle_bound;
  ResidueResult residue;
  // "beta > beta_prime", "beta = beta_prime" or "trivial"
  std::string comparison;
  // every applicable inequality holds
  bool consistent = true;
  std::vector<std::string> problems;
};

// Everything needed to assemble a BoundReport without recomputation.
struct BoundInputs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t alpha = 0;
  std::size_t s = 0;
  bool glp = false;
  bool rank_full = false;
};

BoundReport make_bound_report(const BoundInputs& in, std::size_t a, std::size_t d,
                              std::size_t dim);

template <ExactField F>
BoundInputs bound_inputs(const PointSet<F>& X, const InvariantReport& inv);

template <ExactField F>
BoundReport bound_report(const PointSet<F>& X, std::size_t a, const SearchOptions& opts = {});

struct ProfileEntry {
  std::size_t a = 0;
  std::size_t d = 0;
  std::size_t hyp = 0;
  BoundReport bounds;
};

struct DistanceProfile {
  std::vector<ProfileEntry> entries;  // a = 1 .. reg(X)
  std::optional<std::size_t> v;
  // d strictly decreasing up to a = v, then constant 1
  bool monotone = true;
  std::vector<std::string> problems;
};

template <ExactField F>
DistanceProfile distance_profile(const PointSet<F>& X, const SearchOptions& opts = {},
                                 std::optional<std::size_t> max_degree = std::nullopt);

// Profile assembly from precomputed pieces (used by the report writer and fuzzing).
template <ExactField F>
DistanceProfile distance_profile(const PointSet<F>& X, const InvariantReport& inv,
                                 const std::vector<CodeSummary<F>>& codes);

}  // namespace evalcode
