#pragma once

#include <cstddef>
#include <vector>

#include "evalcode/distance.hpp"
#include "evalcode/point_set.hpp"

namespace evalcode {

// Rank of the k x |Y| matrix whose columns are the points of Y.
template <ExactField F>
std::size_t rank_of(const PointSet<F>& Y);

struct HyperplaneCount {
  std::size_t count = 0;
  bool degenerate = false;  // Y lies in a hyperplane; count is then |Y|
  std::vector<std::size_t> witness;
};

// Maximum number of points of Y on a hyperplane; for rank_of(Y) = k this is n - d(Y)_1.
template <ExactField F>
HyperplaneCount hyp_hyperplane(const PointSet<F>& Y, const SearchOptions& opts = {});

// Every min(k, n) points are linearly independent.
template <ExactField F>
bool is_general_linear_position(const PointSet<F>& X);

// HF(R/I(X), i) = min(n, C(i+k-1, k-1)) for all i.
template <ExactField F>
bool is_generic_position(const PointSet<F>& X);

inline constexpr std::size_t default_uniform_cap = 12;

// X and every nonempty subset are in generic position. Throws TooLarge above the cap.
template <ExactField F>
bool is_uniform_position(const PointSet<F>& X, std::size_t cap = default_uniform_cap);

// Y re-expressed in coordinates of its linear span, a nondegenerate set in P^(rk-1).
template <ExactField F>
PointSet<F> span_coordinates(const PointSet<F>& Y);

}  // namespace evalcode
