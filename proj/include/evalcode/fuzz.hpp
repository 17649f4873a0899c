#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evalcode {

inline constexpr std::size_t fuzz_max_points = 12;
inline constexpr std::size_t fuzz_max_k = 6;

struct FuzzOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 7;
  std::size_t k = 3;
  std::size_t n = 8;  // largest set size; each trial draws n in [k, n]
  std::uint64_t p = 101;
  std::size_t threads = 1;
  std::optional<std::string> reproducer_dir;  // where offending point sets are written
};

struct PropertyTally {
  std::string id;
  std::string description;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

struct FuzzViolation {
  std::size_t trial = 0;
  std::string property;
  std::string detail;
  std::string point_set;  // canonical JSON of the offending set
  std::string reproducer;  // file written, if any
};

struct FuzzReport {
  std::size_t trials = 0;
  std::size_t glp_trials = 0;
  std::vector<PropertyTally> properties;
  std::vector<FuzzViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Random sets over F_p mixing uniform, small-coordinate and general-linear-position samples.
// Throws Precondition when the caps are exceeded.
FuzzReport run_fuzz(const FuzzOptions& opts);

struct MdsReport {
  std::size_t glp_sets = 0;
  std::size_t uniform_sets = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Random GLP sets in P^2 over F_101 (n <= 9) must give d_1 = n - 2; sets verified to be in
// uniform position (n <= 8) must meet the Singleton bound for every a < reg.
MdsReport run_mds_check(std::uint64_t seed, std::size_t glp_sets = 10,
                        std::size_t uniform_sets = 10);

}  // namespace evalcode
