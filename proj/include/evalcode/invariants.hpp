#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "evalcode/matrix.hpp"
#include "evalcode/point_set.hpp"
#include "evalcode/polyspace.hpp"

namespace evalcode {

// HF(R/I(X), i) for i = 0 .. reg(X); the last entry equals n.
struct HilbertProfile {
  std::vector<std::size_t> values;
  std::size_t n = 0;

  std::size_t regularity() const noexcept { return values.size() - 1; }
  // HF at any degree; constant n past the regularity.
  std::size_t at(std::size_t i) const noexcept { return i < values.size() ? values[i] : n; }
};

template <ExactField F>
struct ArtinianReduction {
  PolyVec<F> L;
  std::size_t eliminated_var = 0;   // 0-based index of the variable solved for
  std::vector<Matrix<F>> J_bases;   // degree i = 0 .. reg+1, rows in monomial_basis(k-1, i)
  std::vector<std::size_t> quotient_dims;  // dim (A/J)_i for i = 0 .. reg+1
};

struct InvariantReport {
  HilbertProfile hf;
  std::size_t alpha = 0;
  std::size_t reg = 0;
  std::vector<std::size_t> socle_dims;  // degrees 0 .. reg
  std::size_t s = 0;
  std::vector<std::size_t> separator_degrees;  // empty for a single point
  std::optional<std::size_t> v;                // absent for a single point
};

template <ExactField F>
std::size_t hilbert_function(const PointSet<F>& X, std::size_t a);

template <ExactField F>
HilbertProfile hilbert_profile(const PointSet<F>& X);

// dim I(X)_a = N_a - HF(a).
template <ExactField F>
std::size_t ideal_dim(const PointSet<F>& X, std::size_t a);

template <ExactField F>
std::size_t alpha(const PointSet<F>& X);

template <ExactField F>
std::size_t regularity(const PointSet<F>& X);

template <ExactField F>
struct Separator {
  std::size_t degree = 0;
  PolyVec<F> form;  // vanishes on X \ {P_i}, not at P_i
};

// Separators are found through I(X) : I(P_i) = I(X \ {P_i}), valid for reduced point sets.
template <ExactField F>
Separator<F> separator(const PointSet<F>& X, std::size_t i);

template <ExactField F>
std::size_t separator_degree(const PointSet<F>& X, std::size_t i);

template <ExactField F>
std::vector<std::size_t> separator_degrees(const PointSet<F>& X);

template <ExactField F>
std::size_t v_number(const PointSet<F>& X);

// A linear form nonzero at every point of X. Over F_p all (p^k-1)/(p-1) forms are scanned
// starting from a seed-dependent offset; over Q the forms sum_l t^(l-1) x_l are tried for
// t = seed+1, seed+2, ... Throws FieldTooSmall when no such form exists over F_p.
template <ExactField F>
PolyVec<F> find_nzd_linear_form(const PointSet<F>& X, std::uint64_t seed = 0);

template <ExactField F>
ArtinianReduction<F> artinian_reduction(const PointSet<F>& X, const PolyVec<F>& L);

template <ExactField F>
std::vector<std::size_t> socle_dimensions(const PointSet<F>& X, const ArtinianReduction<F>& red);

template <ExactField F>
std::size_t min_socle_degree(const PointSet<F>& X, std::uint64_t seed = 0);

template <ExactField F>
InvariantReport analyze_invariants(const PointSet<F>& X, std::uint64_t seed = 0);

}  // namespace evalcode
