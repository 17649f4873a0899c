#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evalcode/field.hpp"

namespace evalcode {

// Polynomial rings (and user-supplied point sets) are limited to 16 variables. Point sets built
// internally, such as Veronese images, may live in larger ambient spaces.
inline constexpr std::size_t max_variables = 16;
inline constexpr std::size_t max_ambient = 1024;

// A point of P^(k-1) stored by its standard representative: leftmost nonzero coordinate is 1.
template <ExactField F>
class ProjectivePoint {
 public:
  using value_type = typename F::value_type;

  std::span<const value_type> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const value_type& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

  template <ExactField G>
  friend ProjectivePoint<G> normalize(std::span<const typename G::value_type> raw, const G& field);

 private:
  explicit ProjectivePoint(std::vector<value_type> coords) : coords_(std::move(coords)) {}

  std::vector<value_type> coords_;
};

// Scales raw so its leftmost nonzero entry is 1. Throws ZeroVector.
template <ExactField F>
ProjectivePoint<F> normalize(std::span<const typename F::value_type> raw, const F& field);

// An ordered set X = {P_1, ..., P_n} of distinct points in P^(k-1), n >= 1, k >= 2.
template <ExactField F>
class PointSet {
 public:
  using value_type = typename F::value_type;
  using point_type = ProjectivePoint<F>;

  const F& field() const noexcept { return field_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return points_.size(); }
  const point_type& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<point_type>& points() const noexcept { return points_; }

  // Points at the given indices, in the given order. Indices must be distinct.
  PointSet subset(std::span<const std::size_t> indices) const;
  PointSet without(std::size_t index) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.field_ == b.field_ && a.k_ == b.k_ && a.points_ == b.points_;
  }

  template <ExactField G>
  friend PointSet<G> point_set(const G& field, std::size_t k,
                               const std::vector<std::vector<typename G::value_type>>& rows);

 private:
  PointSet(F field, std::size_t k, std::vector<point_type> points)
      : field_(std::move(field)), k_(k), points_(std::move(points)) {}

  F field_;
  std::size_t k_;
  std::vector<point_type> points_;
};

// Normalizes every row and validates distinctness (DuplicatePointError) and shape.
template <ExactField F>
PointSet<F> point_set(const F& field, std::size_t k,
                      const std::vector<std::vector<typename F::value_type>>& rows);

// Convenience for literal integer coordinates (published matrices, tests).
template <ExactField F>
PointSet<F> point_set_from_ints(const F& field, std::size_t k,
                                const std::vector<std::vector<std::int64_t>>& rows);

// Points whose coordinates are the given matrix columns (k rows, n columns).
template <ExactField F>
PointSet<F> point_set_from_columns(const F& field,
                                   const std::vector<std::vector<std::int64_t>>& columns_matrix);

}  // namespace evalcode
