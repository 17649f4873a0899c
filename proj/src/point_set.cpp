#include "evalcode/point_set.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace evalcode {

template <ExactField F>
ProjectivePoint<F> normalize(std::span<const typename F::value_type> raw, const F& field) {
  auto lead = std::find_if(raw.begin(), raw.end(), [&](const auto& x) { return !field.is_zero(x); });
  if (lead == raw.end()) throw Error(ErrorCode::zero_vector, "cannot normalize the zero vector");
  auto inv = field.inv(*lead);
  std::vector<typename F::value_type> coords;
  coords.reserve(raw.size());
  for (const auto& x : raw) coords.push_back(field.mul(x, inv));
  return ProjectivePoint<F>(std::move(coords));
}

template <ExactField F>
PointSet<F> PointSet<F>::subset(std::span<const std::size_t> indices) const {
  std::vector<point_type> pts;
  pts.reserve(indices.size());
  for (auto i : indices) pts.push_back(points_.at(i));
  if (pts.empty()) throw Error(ErrorCode::precondition, "a point set needs at least one point");
  return PointSet(field_, k_, std::move(pts));
}

template <ExactField F>
PointSet<F> PointSet<F>::without(std::size_t index) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (i != index) keep.push_back(i);
  return subset(keep);
}

template <ExactField F>
PointSet<F> point_set(const F& field, std::size_t k,
                      const std::vector<std::vector<typename F::value_type>>& rows) {
  if (k < 2 || k > max_ambient) {
    throw Error(ErrorCode::precondition,
                "ambient coordinate count k must be in [2, 1024], got " + std::to_string(k));
  }
  if (rows.empty()) throw Error(ErrorCode::precondition, "a point set needs at least one point");
  std::vector<ProjectivePoint<F>> pts;
  pts.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != k) {
      throw Error(ErrorCode::dimension_mismatch, "point " + std::to_string(i) + " has " +
                                                     std::to_string(rows[i].size()) +
                                                     " coordinates, expected " + std::to_string(k));
    }
    try {
      pts.push_back(normalize<F>(rows[i], field));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::zero_vector) throw;
      throw Error(ErrorCode::zero_vector, "point " + std::to_string(i) + " is the zero vector");
    }
  }
  // distinctness via string keys; exact for both fields
  std::map<std::vector<std::string>, std::size_t> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::string> key;
    for (const auto& c : pts[i].coords()) key.push_back(field.to_string(c));
    auto [it, fresh] = seen.emplace(std::move(key), i);
    if (!fresh) throw DuplicatePointError(it->second, i);
  }
  return PointSet<F>(field, k, std::move(pts));
}

template <ExactField F>
PointSet<F> point_set_from_ints(const F& field, std::size_t k,
                                const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<typename F::value_type>> converted;
  for (const auto& r : rows) {
    std::vector<typename F::value_type> row;
    for (auto v : r) row.push_back(field.from_int(v));
    converted.push_back(std::move(row));
  }
  return point_set(field, k, converted);
}

template <ExactField F>
PointSet<F> point_set_from_columns(const F& field,
                                   const std::vector<std::vector<std::int64_t>>& columns_matrix) {
  if (columns_matrix.empty()) throw Error(ErrorCode::precondition, "empty coordinate matrix");
  std::size_t k = columns_matrix.size();
  std::size_t n = columns_matrix.front().size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(k));
  for (std::size_t r = 0; r < k; ++r) {
    if (columns_matrix[r].size() != n) throw Error(ErrorCode::dimension_mismatch, "ragged matrix");
    for (std::size_t c = 0; c < n; ++c) rows[c][r] = columns_matrix[r][c];
  }
  return point_set_from_ints(field, k, rows);
}

#define EVALCODE_INSTANTIATE(F)                                                              \
  template class PointSet<F>;                                                                \
  template ProjectivePoint<F> normalize(std::span<const F::value_type>, const F&);          \
  template PointSet<F> point_set(const F&, std::size_t,                                      \
                                 const std::vector<std::vector<F::value_type>>&);            \
  template PointSet<F> point_set_from_ints(const F&, std::size_t,                            \
                                           const std::vector<std::vector<std::int64_t>>&);   \
  template PointSet<F> point_set_from_columns(const F&,                                      \
                                              const std::vector<std::vector<std::int64_t>>&);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
