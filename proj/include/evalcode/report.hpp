#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <json.hpp>

#include "evalcode/bounds.hpp"
#include "evalcode/distance.hpp"
#include "evalcode/geometry.hpp"
#include "evalcode/invariants.hpp"
#include "evalcode/point_set.hpp"

namespace evalcode {

inline constexpr int report_schema = 1;

struct AnalyzeOptions {
  SearchOptions search;
  std::optional<std::size_t> max_degree;
  std::uint64_t seed = 0;            // picks the non-zerodivisor for the socle computation
  std::size_t uniform_cap = default_uniform_cap;  // brute-force uniform position check up to this size
  bool timing = true;
};

template <ExactField F>
nlohmann::json form_json(const PolyVec<F>& f);

template <ExactField F>
nlohmann::json code_summary_json(const CodeSummary<F>& c);

nlohmann::json invariants_json(const InvariantReport& inv);
nlohmann::json bound_report_json(const BoundReport& r);

// Full analysis: input echo, invariants, position flags, per-degree code and bound data
// for a = 1 .. min(max_degree, reg), the distance profile verdict and timings in microseconds.
template <ExactField F>
nlohmann::json analyze_report(const PointSet<F>& X, const AnalyzeOptions& opts = {});

}  // namespace evalcode
