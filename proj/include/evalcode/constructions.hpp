#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "evalcode/distance.hpp"
#include "evalcode/field.hpp"
#include "evalcode/point_set.hpp"

namespace evalcode {

inline constexpr std::size_t default_max_retries = 64;

struct CertificateEntry {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct Certificate {
  std::vector<CertificateEntry> entries;

  void check(std::string name, const std::string& expected, const std::string& computed);
  void check(std::string name, std::size_t expected, std::size_t computed);
  void check(std::string name, bool expected, bool computed);
  bool ok() const noexcept;
  // "name: expected X, computed Y" for every failing entry, joined by "; ".
  std::string failures() const;
};

template <ExactField F>
struct ConstructionResult {
  PointSet<F> X;
  Certificate certificate;
  std::size_t attempts = 1;
  std::uint64_t seed = 0;  // seed of the accepted attempt
};

// Identifiers of the fixed configurations with published coordinates.
const std::vector<std::string>& published_example_ids();

// The fixed configuration and its certificate, whether or not the certificate passes.
// Throws UnknownExample; CertificateMismatch when the coordinates degenerate in the field.
template <ExactField F>
ConstructionResult<F> published_example_unchecked(const std::string& id, const F& field,
                                              const SearchOptions& opts = {});

// As above; throws CertificateMismatch unless every certificate entry holds.
template <ExactField F>
ConstructionResult<F> published_example(const std::string& id, const F& field,
                                    const SearchOptions& opts = {});

// Coordinate points e_1, ..., e_k.
template <ExactField F>
ConstructionResult<F> build_spanning_simplex(std::size_t k, const F& field);

// 2k-2 points on V(x_k) and k points off it: alpha = 3 and d_1 = k.
template <ExactField F>
ConstructionResult<F> build_split_configuration(std::size_t k, const F& field, std::uint64_t seed,
                                                std::size_t max_retries = default_max_retries,
                                                const SearchOptions& opts = {});

// C(m+k-3, k-1) points of x_k = 1 in generic position followed by ell points of V(x_k);
// for ell >= C(m+k-3, k-2) this gives alpha = m and d_1 = beta_1 = C(m+k-3, k-1).
template <ExactField F>
ConstructionResult<F> build_beta_extremal(std::size_t k, std::size_t m, std::size_t ell,
                                          const F& field, std::uint64_t seed,
                                          std::size_t max_retries = default_max_retries,
                                          const SearchOptions& opts = {});

// Ten points of the conic x1 x3 = x2^2 + 2 x3^2, parametrized as [t^2+2, t, 1], together with
// the four points of V(x1(x1-x3), x2(x2-x3)). The socle bound is attained at a = 2.
template <ExactField F>
ConstructionResult<F> build_conic_configuration(const F& field, std::uint64_t seed,
                                                std::size_t max_retries = default_max_retries,
                                                const SearchOptions& opts = {});

// n distinct seed-determined points of P^(k-1). Over Q coordinates are integers in [-25, 25].
template <ExactField F>
PointSet<F> random_points(std::size_t k, std::size_t n, const F& field, std::uint64_t seed);

template <ExactField F>
PointSet<F> random_glp_points(std::size_t k, std::size_t n, const F& field, std::uint64_t seed,
                              std::size_t max_retries = default_max_retries);

// Named builder invocation, as exposed on the command line.
struct ConstructionSpec {
  std::string name;
  std::map<std::string, std::int64_t> params;
  std::string example;  // id for name == "example"
  std::uint64_t seed = 0;
  std::size_t max_retries = default_max_retries;
};

const std::vector<std::string>& construction_names();

template <ExactField F>
ConstructionResult<F> construct(const ConstructionSpec& spec, const F& field,
                                const SearchOptions& opts = {});

}  // namespace evalcode
