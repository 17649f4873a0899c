#include "evalcode/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "evalcode/combinatorics.hpp"
#include "evalcode/invariants.hpp"
#include "evalcode/polyspace.hpp"

namespace evalcode {

template <ExactField F>
std::size_t rank_of(const PointSet<F>& Y) {
  return rank(evaluation_matrix(Y, 1));
}

template <ExactField F>
HyperplaneCount hyp_hyperplane(const PointSet<F>& Y, const SearchOptions& opts) {
  if (rank_of(Y) < Y.k()) {
    std::vector<std::size_t> all(Y.size());
    std::iota(all.begin(), all.end(), 0);
    return {Y.size(), true, std::move(all)};
  }
  auto witness = max_rank_deficient_subset(evaluation_matrix(Y, 1), opts);
  return {witness.size(), false, std::move(witness)};
}

namespace {

template <ExactField F>
bool independent_subsets(const Matrix<F>& coords, std::size_t size, std::size_t start,
                         EchelonBuilder<F>& builder, std::size_t depth) {
  if (depth == size) return true;
  for (std::size_t i = start; i + (size - depth) <= coords.rows(); ++i) {
    if (!builder.insert(coords.row(i))) return false;
    bool ok = independent_subsets(coords, size, i + 1, builder, depth + 1);
    builder.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

template <ExactField F>
bool is_general_linear_position(const PointSet<F>& X) {
  // a dependent prefix of any combination already fails, so prefixes are checked as they grow
  auto coords = evaluation_matrix(X, 1);
  const std::size_t u = std::min(X.k(), X.size());
  EchelonBuilder<F> builder(X.field(), X.k());
  return independent_subsets(coords, u, 0, builder, 0);
}

template <ExactField F>
bool is_generic_position(const PointSet<F>& X) {
  auto hf = hilbert_profile(X);
  for (std::size_t i = 0; i < hf.values.size(); ++i) {
    std::uint64_t expected = std::min<std::uint64_t>(
        X.size(), monomial_count(static_cast<std::int64_t>(X.k()), static_cast<std::int64_t>(i)));
    if (hf.values[i] != expected) return false;
  }
  return true;
}

template <ExactField F>
bool is_uniform_position(const PointSet<F>& X, std::size_t cap) {
  const std::size_t n = X.size();
  if (n > cap) {
    throw Error(ErrorCode::too_large, "uniform-position check over " + std::to_string(n) +
                                          " points exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::size_t> members;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    members.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    if (!is_generic_position(X.subset(members))) return false;
  }
  return true;
}

template <ExactField F>
PointSet<F> span_coordinates(const PointSet<F>& Y) {
  auto coords = evaluation_matrix(Y, 1);
  auto ech = rref(coords);
  // the rref basis has an identity block at the pivots, so those entries are the coordinates
  auto projected = coords.select_cols(ech.pivot_cols);
  std::vector<std::vector<typename F::value_type>> rows;
  for (std::size_t i = 0; i < projected.rows(); ++i) {
    rows.emplace_back(projected.row(i).begin(), projected.row(i).end());
  }
  if (ech.rank() < 2) {
    throw Error(ErrorCode::precondition, "a single point spans P^0; no nondegenerate embedding");
  }
  return point_set(Y.field(), ech.rank(), rows);
}

#define EVALCODE_INSTANTIATE(F)                                                         \
  template std::size_t rank_of(const PointSet<F>&);                                     \
  template HyperplaneCount hyp_hyperplane(const PointSet<F>&, const SearchOptions&);    \
  template bool is_general_linear_position(const PointSet<F>&);                         \
  template bool is_generic_position(const PointSet<F>&);                                \
  template bool is_uniform_position(const PointSet<F>&, std::size_t);                   \
  template PointSet<F> span_coordinates(const PointSet<F>&);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
