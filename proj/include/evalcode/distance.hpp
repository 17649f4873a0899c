#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evalcode/matrix.hpp"
#include "evalcode/point_set.hpp"
#include "evalcode/polyspace.hpp"

namespace evalcode {

struct SearchOptions {
  std::size_t threads = 1;
  std::size_t max_points = 24;  // subset search refuses larger sets unless force is set
  bool force = false;
};

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

// hyp(X)_a together with the lexicographically first maximal witness X' and a degree-a form
// vanishing on X' and at no other point of X.
template <ExactField F>
struct HypResult {
  std::size_t count = 0;
  std::vector<std::size_t> witness;
  PolyVec<F> form;
};

template <ExactField F>
struct CodeSummary {
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t dim = 0;  // k(X)_a = HF(R/I(X), a)
  std::size_t d = 0;
  std::size_t hyp = 0;
  std::vector<std::size_t> witness;
  PolyVec<F> witness_form;
};

// Largest t < rows(m) such that some t rows of m have rank below rank(m); returns the
// lexicographically first such row subset. Descending t, depth-first over combinations,
// pruning a prefix once its rank reaches rank(m).
template <ExactField F>
std::vector<std::size_t> max_rank_deficient_subset(const Matrix<F>& m, const SearchOptions& opts);

// dim x n matrix in reduced echelon form whose row space is C(X)_a.
template <ExactField F>
Matrix<F> generator_matrix(const PointSet<F>& X, std::size_t a);

template <ExactField F>
HypResult<F> hyp_a(const PointSet<F>& X, std::size_t a, const SearchOptions& opts = {});

template <ExactField F>
CodeSummary<F> min_distance(const PointSet<F>& X, std::size_t a, const SearchOptions& opts = {});

// Minimum weight over all nonzero codewords of C(X)_a. Prime fields only, p^dim <= cap.
template <ExactField F>
std::size_t min_distance_enum(const PointSet<F>& X, std::size_t a,
                              std::uint64_t cap = default_enumeration_cap);

// v_a(X) in P^(N_a - 1).
template <ExactField F>
PointSet<F> veronese_image(const PointSet<F>& X, std::size_t a);

}  // namespace evalcode
