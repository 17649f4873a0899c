#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evalcode/field.hpp"
#include "evalcode/point_set.hpp"
#include "oracle.hpp"

namespace support {

inline std::string fixture(const std::string& name) {
  return std::string(EVALCODE_FIXTURE_DIR) + "/" + name;
}

// Published coordinate matrices; column j is the (j+1)-th point.
inline const std::vector<std::vector<std::int64_t>> g34 = {
    {0, 1, 2, 3, 0, 1, 2, 3, 1, 2}, {0, 0, 0, 0, 3, 3, 3, 2, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
inline const std::vector<std::vector<std::int64_t>> g39 = {
    {0, 1, 2, 3, 0, 0, 1}, {0, 0, 0, 0, 1, 2, 1}, {1, 1, 1, 1, 1, 1, 1}};
inline const std::vector<std::vector<std::int64_t>> g42 = {{8, 4, 9, 8, 6, 2, 0, 0, 3, 1},
                                                           {4, 5, 3, 7, 0, 8, 5, 2, 5, 0},
                                                           {3, 0, 2, 0, 2, 4, 2, 7, 0, 9},
                                                           {0, 6, 8, 2, 4, 1, 0, 1, 3, 2}};
inline const std::vector<std::vector<std::int64_t>> g52 = {
    {1, 2, 3, 4, 4, 5, 1, 2, 3, 4, 5, 0, 0, 0, 0},
    {1, 3, 2, 4, 5, 1, 0, 0, 0, 0, 0, 1, 2, 3, 4},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};

// Five points of P^2: three on the line y = 0 and two off it.
inline const std::vector<std::vector<std::int64_t>> three_collinear_two_off = {
    {0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {1, 2, 1}};

template <evalcode::ExactField F>
evalcode::PointSet<F> columns(const F& f, const std::vector<std::vector<std::int64_t>>& g) {
  return evalcode::point_set_from_columns(f, g);
}

inline std::vector<oracle::Row> oracle_points(const std::vector<std::vector<std::int64_t>>& g) {
  std::vector<oracle::Row> pts(g[0].size(), oracle::Row(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[0].size(); ++j) pts[j][i] = g[i][j];
  return pts;
}

// Coordinates of a point set over F_p as plain integers.
inline std::vector<oracle::Row> oracle_points(const evalcode::PointSet<evalcode::PrimeField>& X) {
  std::vector<oracle::Row> pts;
  for (const auto& P : X.points()) {
    oracle::Row r;
    for (auto c : P.coords()) r.push_back(c);
    pts.push_back(r);
  }
  return pts;
}

}  // namespace support
