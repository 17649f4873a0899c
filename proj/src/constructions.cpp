#include "evalcode/constructions.hpp"

#include <algorithm>
#include <set>
#include <type_traits>

#include "evalcode/bounds.hpp"
#include "evalcode/combinatorics.hpp"
#include "evalcode/error.hpp"
#include "evalcode/geometry.hpp"
#include "evalcode/invariants.hpp"
#include "evalcode/rng.hpp"

namespace evalcode {

void Certificate::check(std::string name, const std::string& expected,
                        const std::string& computed) {
  entries.push_back({std::move(name), expected, computed, expected == computed});
}

void Certificate::check(std::string name, std::size_t expected, std::size_t computed) {
  check(std::move(name), std::to_string(expected), std::to_string(computed));
}

void Certificate::check(std::string name, bool expected, bool computed) {
  check(std::move(name), std::string(expected ? "true" : "false"),
        std::string(computed ? "true" : "false"));
}

bool Certificate::ok() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

std::string Certificate::failures() const {
  std::string out;
  for (const auto& e : entries) {
    if (e.ok) continue;
    if (!out.empty()) out += "; ";
    out += e.name + ": expected " + e.expected + ", computed " + e.computed;
  }
  return out;
}

namespace {

constexpr std::int64_t rational_radius = 25;
constexpr std::uint64_t enumerate_limit = 1 << 16;

using Matrix64 = std::vector<std::vector<std::int64_t>>;

struct PublishedMatrix {
  std::string id;
  Matrix64 columns;  // k rows; column j is P_{j+1}
};

const std::vector<PublishedMatrix>& published_matrices() {
  static const std::vector<PublishedMatrix> table = {
      {"3.4",
       {{0, 1, 2, 3, 0, 1, 2, 3, 1, 2},
        {0, 0, 0, 0, 3, 3, 3, 2, 1, 1},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}},
      {"3.9", {{0, 1, 2, 3, 0, 0, 1}, {0, 0, 0, 0, 1, 2, 1}, {1, 1, 1, 1, 1, 1, 1}}},
      {"4.2",
       {{8, 4, 9, 8, 6, 2, 0, 0, 3, 1},
        {4, 5, 3, 7, 0, 8, 5, 2, 5, 0},
        {3, 0, 2, 0, 2, 4, 2, 7, 0, 9},
        {0, 6, 8, 2, 4, 1, 0, 1, 3, 2}}},
      {"5.2",
       {{1, 2, 3, 4, 4, 5, 1, 2, 3, 4, 5, 0, 0, 0, 0},
        {1, 3, 2, 4, 5, 1, 0, 0, 0, 0, 0, 1, 2, 3, 4},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}},
  };
  return table;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

template <ExactField F>
constexpr bool is_prime_field = std::is_same_v<F, PrimeField>;

// p^e, saturating at max.
std::uint64_t saturating_power(std::uint64_t p, std::size_t e, std::uint64_t max) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > max / p) return max;
    v *= p;
  }
  return v;
}

// Samples n distinct vectors. Projective mode draws points of P^(dim-1) (dim >= 1); affine mode
// draws vectors of K^dim. Small finite spaces are enumerated and shuffled.
template <ExactField F>
std::vector<std::vector<typename F::value_type>> distinct_vectors(const F& field, std::size_t dim,
                                                                  std::size_t n, bool projective,
                                                                  Rng& rng) {
  using V = typename F::value_type;
  std::vector<std::vector<V>> out;
  if (n == 0) return out;
  constexpr std::uint64_t huge = std::uint64_t{1} << 62;

  std::uint64_t capacity = huge;
  std::uint64_t space = huge;
  if constexpr (is_prime_field<F>) {
    const std::uint64_t p = field.modulus();
    space = saturating_power(p, dim, huge);
    if (projective) {
      capacity = space >= huge ? huge : (space - 1) / (p - 1);
    } else {
      capacity = space;
    }
  } else if (projective && dim == 1) {
    capacity = 1;
  } else if (dim == 0) {
    capacity = 1;
  }
  if (capacity < n) {
    throw Error(ErrorCode::construction_failed,
                "cannot choose " + std::to_string(n) + " distinct points: only " +
                    std::to_string(capacity) + " exist");
  }

  auto is_normalized = [&](const std::vector<V>& v) {
    for (const auto& c : v) {
      if (field.is_zero(c)) continue;
      return field.equal(c, field.one());
    }
    return false;
  };

  if constexpr (is_prime_field<F>) {
    if (space <= enumerate_limit) {
      const std::uint64_t p = field.modulus();
      std::vector<std::vector<V>> all;
      for (std::uint64_t code = 0; code < space; ++code) {
        std::vector<V> v(dim);
        std::uint64_t c = code;
        for (std::size_t i = dim; i-- > 0;) {
          v[i] = static_cast<V>(c % p);
          c /= p;
        }
        if (projective && !is_normalized(v)) continue;
        all.push_back(std::move(v));
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto j = i + rng.below(all.size() - i);
        std::swap(all[i], all[j]);
      }
      all.resize(n);
      return all;
    }
  }

  auto draw = [&]() {
    if constexpr (is_prime_field<F>) {
      return field.from_int(static_cast<std::int64_t>(rng.below(field.modulus())));
    } else {
      return field.from_int(rng.between(-rational_radius, rational_radius));
    }
  };
  std::set<std::vector<std::string>> seen;
  const std::size_t budget = 1000 * n + 1000;
  for (std::size_t tries = 0; out.size() < n; ++tries) {
    if (tries >= budget) {
      throw Error(ErrorCode::construction_failed, "could not sample distinct points");
    }
    std::vector<V> v(dim);
    for (auto& c : v) c = draw();
    if (projective) {
      if (std::all_of(v.begin(), v.end(), [&](const V& c) { return field.is_zero(c); })) continue;
      auto pt = normalize<F>(std::span<const V>(v), field);
      v.assign(pt.coords().begin(), pt.coords().end());
    }
    std::vector<std::string> key;
    for (const auto& c : v) key.push_back(field.to_string(c));
    if (seen.insert(std::move(key)).second) out.push_back(std::move(v));
  }
  return out;
}

template <ExactField F>
std::vector<typename F::value_type> with_last(std::vector<typename F::value_type> v,
                                              typename F::value_type last) {
  v.push_back(std::move(last));
  return v;
}

template <ExactField F>
void check_distance(Certificate& cert, const PointSet<F>& X, std::size_t a, std::size_t hyp,
                    const SearchOptions& opts) {
  auto code = min_distance(X, a, opts);
  cert.check("hyp_" + std::to_string(a), hyp, code.hyp);
  cert.check("d_" + std::to_string(a), X.size() - hyp, code.d);
}

template <ExactField F>
ConstructionResult<F> example_from_matrix(const PublishedMatrix& pm, const F& field,
                                          const SearchOptions& opts) {
  if constexpr (is_prime_field<F>) {
    std::int64_t largest = 0;
    for (const auto& row : pm.columns) {
      for (auto v : row) largest = std::max(largest, v);
    }
    if (field.modulus() <= static_cast<std::uint64_t>(largest)) {
      throw Error(ErrorCode::certificate_mismatch,
                  "example " + pm.id + " needs p > " + std::to_string(largest));
    }
  }
  auto X = point_set_from_columns(field, pm.columns);
  Certificate cert;
  const auto& id = pm.id;
  if (id == "3.4") {
    cert.check("alpha", std::size_t{4}, alpha(X));
    check_distance(cert, X, 1, 4, opts);
    check_distance(cert, X, 2, 7, opts);
    check_distance(cert, X, 3, 9, opts);
  } else if (id == "3.9") {
    cert.check("alpha", std::size_t{3}, alpha(X));
    check_distance(cert, X, 1, 4, opts);
  } else if (id == "4.2") {
    cert.check("glp", true, is_general_linear_position(X));
    check_distance(cert, X, 1, 3, opts);
    cert.check("s", std::size_t{2}, min_socle_degree(X));
    cert.check("reg", std::size_t{2}, regularity(X));
    cert.check("v", std::size_t{2}, v_number(X));
  } else if (id == "5.2") {
    cert.check("hf", std::string("1 3 6 10 15"), join(hilbert_profile(X).values));
    cert.check("generic", true, is_generic_position(X));
    cert.check("glp", false, is_general_linear_position(X));
    cert.check("alpha", std::size_t{5}, alpha(X));
    cert.check("reg", std::size_t{4}, regularity(X));
    cert.check("s", std::size_t{4}, min_socle_degree(X));
    check_distance(cert, X, 2, 9, opts);
  }
  return {std::move(X), std::move(cert), 1, 0};
}

// Runs build(attempt_seed) until the certificate passes.
template <ExactField F, class Build>
ConstructionResult<F> with_retries(const std::string& what, std::uint64_t seed,
                                   std::size_t max_retries, Build build) {
  std::string last;
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(max_retries, 1); ++attempt) {
    const auto s = derive_seed(seed, attempt);
    ConstructionResult<F> result = build(s);
    if (result.certificate.ok()) {
      result.attempts = attempt + 1;
      result.seed = s;
      return result;
    }
    last = result.certificate.failures();
  }
  throw Error(ErrorCode::construction_failed,
              what + ": no certified sample in " + std::to_string(max_retries) +
                  " attempts (last: " + last + ")");
}

template <ExactField F>
std::int64_t param(const ConstructionSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    throw Error(ErrorCode::precondition,
                "construction '" + spec.name + "' needs parameter '" + name + "'");
  }
  if (it->second < 0) throw Error(ErrorCode::precondition, "parameter '" + name + "' is negative");
  return it->second;
}

}  // namespace

const std::vector<std::string>& published_example_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& pm : published_matrices()) out.push_back(pm.id);
    return out;
  }();
  return ids;
}

template <ExactField F>
ConstructionResult<F> published_example_unchecked(const std::string& id, const F& field,
                                              const SearchOptions& opts) {
  for (const auto& pm : published_matrices()) {
    if (pm.id != id) continue;
    try {
      return example_from_matrix(pm, field, opts);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::zero_vector || e.code() == ErrorCode::duplicate_point) {
        throw Error(ErrorCode::certificate_mismatch,
                    "example " + id + " degenerates over " + field.spec().name() + ": " +
                        e.what());
      }
      throw;
    }
  }
  throw Error(ErrorCode::unknown_example, "unknown example '" + id + "'");
}

template <ExactField F>
ConstructionResult<F> published_example(const std::string& id, const F& field,
                                    const SearchOptions& opts) {
  auto result = published_example_unchecked(id, field, opts);
  if (!result.certificate.ok()) {
    throw Error(ErrorCode::certificate_mismatch, "example " + id + " over " +
                                                     field.spec().name() + ": " +
                                                     result.certificate.failures());
  }
  return result;
}

template <ExactField F>
ConstructionResult<F> build_spanning_simplex(std::size_t k, const F& field) {
  if (k < 3) throw Error(ErrorCode::precondition, "simplex needs k >= 3");
  Matrix64 rows(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1;
  auto X = point_set_from_ints(field, k, rows);
  Certificate cert;
  cert.check("alpha", std::size_t{2}, alpha(X));
  check_distance(cert, X, 1, k - 1, {});
  return {std::move(X), std::move(cert), 1, 0};
}

template <ExactField F>
ConstructionResult<F> build_split_configuration(std::size_t k, const F& field, std::uint64_t seed,
                                                std::size_t max_retries,
                                                const SearchOptions& opts) {
  if (k < 3) throw Error(ErrorCode::precondition, "split configuration needs k >= 3");
  using V = typename F::value_type;
  return with_retries<F>("split configuration", seed, max_retries, [&](std::uint64_t s) {
    Rng rng(s);
    std::vector<std::vector<V>> rows;
    for (auto& v : distinct_vectors(field, k - 1, 2 * k - 2, true, rng)) {
      rows.push_back(with_last<F>(std::move(v), field.zero()));
    }
    for (auto& v : distinct_vectors(field, k - 1, k, false, rng)) {
      rows.push_back(with_last<F>(std::move(v), field.one()));
    }
    auto X = point_set(field, k, rows);
    Certificate cert;
    const auto al = alpha(X);
    cert.check("alpha", std::size_t{3}, al);
    if (al == 3) {
      check_distance(cert, X, 1, 2 * k - 2, opts);
      const auto ik = static_cast<std::int64_t>(k);
      cert.check("beta_1", k, static_cast<std::size_t>(beta(3, ik, 1)));
      cert.check("beta_prime_1", k, static_cast<std::size_t>(beta_prime(3, ik, 1)));
    }
    return ConstructionResult<F>{std::move(X), std::move(cert), 1, s};
  });
}

template <ExactField F>
ConstructionResult<F> build_beta_extremal(std::size_t k, std::size_t m, std::size_t ell,
                                          const F& field, std::uint64_t seed,
                                          std::size_t max_retries, const SearchOptions& opts) {
  if (k < 3) throw Error(ErrorCode::precondition, "beta-extremal construction needs k >= 3");
  if (m < 4) throw Error(ErrorCode::precondition, "beta-extremal construction needs m >= 4");
  const auto y_size = static_cast<std::size_t>(binomial(m + k - 3, k - 1));
  const auto mu = static_cast<std::size_t>(binomial(m + k - 3, k - 2));
  if (ell < mu) {
    throw Error(ErrorCode::precondition, "ell = " + std::to_string(ell) +
                                             " is below mu = " + std::to_string(mu));
  }
  using V = typename F::value_type;
  return with_retries<F>("beta-extremal construction", seed, max_retries, [&](std::uint64_t s) {
    Rng rng(s);
    std::vector<std::vector<V>> rows;
    for (auto& v : distinct_vectors(field, k - 1, y_size, false, rng)) {
      rows.push_back(with_last<F>(std::move(v), field.one()));
    }
    for (auto& v : distinct_vectors(field, k - 1, ell, true, rng)) {
      rows.push_back(with_last<F>(std::move(v), field.zero()));
    }
    auto X = point_set(field, k, rows);
    std::vector<std::size_t> y_idx(y_size);
    for (std::size_t i = 0; i < y_size; ++i) y_idx[i] = i;
    auto Y = X.subset(y_idx);

    Certificate cert;
    const bool generic = is_generic_position(Y);
    cert.check("Y generic", true, generic);
    if (!generic) return ConstructionResult<F>{std::move(X), std::move(cert), 1, s};
    const auto al = alpha(X);
    cert.check("alpha", m, al);
    if (al != m) return ConstructionResult<F>{std::move(X), std::move(cert), 1, s};
    auto code = min_distance(X, 1, opts);
    cert.check("hyp_1", ell, code.hyp);
    cert.check("d_1", y_size, code.d);
    cert.check("beta_equals_d", true,
               code.d == static_cast<std::size_t>(beta(static_cast<std::int64_t>(m),
                                                       static_cast<std::int64_t>(k), 1)));
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (!std::binary_search(code.witness.begin(), code.witness.end(), i)) {
        complement.push_back(i);
      }
    }
    cert.check("witness complement", join(y_idx), join(complement));
    const auto alpha_y = alpha(Y);
    cert.check("reg(Y)", alpha_y - 1, regularity(Y));
    cert.check("alpha(Y)", m - 1, alpha_y);
    return ConstructionResult<F>{std::move(X), std::move(cert), 1, s};
  });
}

template <ExactField F>
ConstructionResult<F> build_conic_configuration(const F& field, std::uint64_t seed,
                                                std::size_t max_retries,
                                                const SearchOptions& opts) {
  if constexpr (is_prime_field<F>) {
    if (field.modulus() == 2) {
      throw Error(ErrorCode::construction_failed, "the conic degenerates in characteristic 2");
    }
  }
  using V = typename F::value_type;
  return with_retries<F>("conic configuration", seed, max_retries, [&](std::uint64_t s) {
    Rng rng(s);
    auto params = distinct_vectors(field, 1, 10, false, rng);
    std::vector<std::vector<V>> rows;
    for (const auto& tv : params) {
      const V& t = tv[0];
      rows.push_back({field.add(field.mul(t, t), field.from_int(2)), t, field.one()});
    }
    for (auto [x, y] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) {
      rows.push_back({field.from_int(x), field.from_int(y), field.one()});
    }
    auto X = point_set(field, 3, rows);
    Certificate cert;
    const bool glp = is_general_linear_position(X);
    cert.check("glp", true, glp);
    if (!glp) return ConstructionResult<F>{std::move(X), std::move(cert), 1, s};
    check_distance(cert, X, 2, 10, opts);
    cert.check("s", std::size_t{4}, min_socle_degree(X));
    cert.check("reg", std::size_t{5}, regularity(X));
    check_distance(cert, X, 3, 12, opts);
    return ConstructionResult<F>{std::move(X), std::move(cert), 1, s};
  });
}

template <ExactField F>
PointSet<F> random_points(std::size_t k, std::size_t n, const F& field, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::precondition, "random points need k >= 2");
  if (n < 1) throw Error(ErrorCode::precondition, "random points need n >= 1");
  Rng rng(seed);
  return point_set(field, k, distinct_vectors(field, k, n, true, rng));
}

template <ExactField F>
PointSet<F> random_glp_points(std::size_t k, std::size_t n, const F& field, std::uint64_t seed,
                              std::size_t max_retries) {
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(max_retries, 1); ++attempt) {
    auto X = random_points(k, n, field, derive_seed(seed, attempt));
    if (is_general_linear_position(X)) return X;
  }
  throw Error(ErrorCode::construction_failed,
              "no set in general linear position within " + std::to_string(max_retries) +
                  " attempts");
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {
      "example", "simplex", "split", "beta-extremal", "conic", "random", "random-glp"};
  return names;
}

template <ExactField F>
ConstructionResult<F> construct(const ConstructionSpec& spec, const F& field,
                                const SearchOptions& opts) {
  auto get = [&](const std::string& name) {
    return static_cast<std::size_t>(param<F>(spec, name));
  };
  if (spec.name == "example") return published_example(spec.example, field, opts);
  if (spec.name == "simplex") return build_spanning_simplex(get("k"), field);
  if (spec.name == "split") {
    return build_split_configuration(get("k"), field, spec.seed, spec.max_retries, opts);
  }
  if (spec.name == "beta-extremal") {
    return build_beta_extremal(get("k"), get("m"), get("ell"), field, spec.seed,
                               spec.max_retries, opts);
  }
  if (spec.name == "conic") {
    return build_conic_configuration(field, spec.seed, spec.max_retries, opts);
  }
  if (spec.name == "random" || spec.name == "random-glp") {
    const auto k = get("k");
    const auto n = get("n");
    Certificate cert;
    if (spec.name == "random") {
      auto X = random_points(k, n, field, spec.seed);
      cert.check("n", n, X.size());
      return {std::move(X), std::move(cert), 1, spec.seed};
    }
    auto X = random_glp_points(k, n, field, spec.seed, spec.max_retries);
    cert.check("glp", true, is_general_linear_position(X));
    return {std::move(X), std::move(cert), 1, spec.seed};
  }
  throw Error(ErrorCode::unknown_example, "unknown construction '" + spec.name + "'");
}

#define EVALCODE_INSTANTIATE(F)                                                               \
  template ConstructionResult<F> published_example_unchecked(const std::string&, const F&,        \
                                                         const SearchOptions&);               \
  template ConstructionResult<F> published_example(const std::string&, const F&,                  \
                                               const SearchOptions&);                         \
  template ConstructionResult<F> build_spanning_simplex(std::size_t, const F&);               \
  template ConstructionResult<F> build_split_configuration(std::size_t, const F&,             \
                                                           std::uint64_t, std::size_t,        \
                                                           const SearchOptions&);             \
  template ConstructionResult<F> build_beta_extremal(std::size_t, std::size_t, std::size_t,   \
                                                     const F&, std::uint64_t, std::size_t,    \
                                                     const SearchOptions&);                   \
  template ConstructionResult<F> build_conic_configuration(const F&, std::uint64_t,           \
                                                           std::size_t, const SearchOptions&); \
  template PointSet<F> random_points(std::size_t, std::size_t, const F&, std::uint64_t);      \
  template PointSet<F> random_glp_points(std::size_t, std::size_t, const F&, std::uint64_t,   \
                                         std::size_t);                                        \
  template ConstructionResult<F> construct(const ConstructionSpec&, const F&,                 \
                                           const SearchOptions&);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
