#include "evalcode/invariants.hpp"

#include <algorithm>
#include <string>

#include "evalcode/combinatorics.hpp"
#include "evalcode/rng.hpp"

namespace evalcode {

template <ExactField F>
std::size_t hilbert_function(const PointSet<F>& X, std::size_t a) {
  if (a == 0) return 1;
  return rank(evaluation_matrix(X, a));
}

template <ExactField F>
HilbertProfile hilbert_profile(const PointSet<F>& X) {
  HilbertProfile profile;
  profile.n = X.size();
  profile.values.push_back(1);
  while (profile.values.back() < X.size()) {
    std::size_t next = hilbert_function(X, profile.values.size());
    if (next < profile.values.back()) {
      throw Error(ErrorCode::internal, "Hilbert function decreased; arithmetic is broken");
    }
    profile.values.push_back(next);
  }
  return profile;
}

template <ExactField F>
std::size_t ideal_dim(const PointSet<F>& X, std::size_t a) {
  return monomial_count(static_cast<std::int64_t>(X.k()), static_cast<std::int64_t>(a)) -
         hilbert_function(X, a);
}

template <ExactField F>
std::size_t alpha(const PointSet<F>& X) {
  // terminates: dim I(X)_a > 0 as soon as N_a > n
  for (std::size_t a = 1;; ++a) {
    if (ideal_dim(X, a) > 0) return a;
  }
}

template <ExactField F>
std::size_t regularity(const PointSet<F>& X) {
  return hilbert_profile(X).regularity();
}

namespace {

// Rows of m other than `skip` span less than m does, i.e. row `skip` is essential.
template <ExactField F>
bool row_is_essential(const Matrix<F>& m, std::size_t skip, std::size_t full_rank) {
  EchelonBuilder<F> builder(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != skip) builder.insert(m.row(r));
  }
  return builder.rank() < full_rank;
}

template <ExactField F>
PolyVec<F> separating_form(const PointSet<F>& X, const Matrix<F>& m, std::size_t i,
                           std::size_t a) {
  std::vector<std::size_t> others;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (r != i) others.push_back(r);
  auto kernel = kernel_basis(m.select_rows(others));
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    auto values = m.apply(kernel.row(r));
    if (!X.field().is_zero(values[i])) {
      return form_from_coeffs(X.field(), X.k(), a,
                              std::vector<typename F::value_type>(kernel.row(r).begin(),
                                                                  kernel.row(r).end()));
    }
  }
  throw Error(ErrorCode::internal, "essential row without a separating kernel vector");
}

}  // namespace

template <ExactField F>
Separator<F> separator(const PointSet<F>& X, std::size_t i) {
  if (X.size() < 2) throw Error(ErrorCode::singleton_set, "separators need at least two points");
  if (i >= X.size()) throw Error(ErrorCode::out_of_range, "point index out of range");
  // at a = reg(X) the evaluation matrix has full row rank, so this loop terminates
  for (std::size_t a = 1;; ++a) {
    auto m = evaluation_matrix(X, a);
    if (row_is_essential(m, i, rank(m))) return {a, separating_form(X, m, i, a)};
  }
}

template <ExactField F>
std::size_t separator_degree(const PointSet<F>& X, std::size_t i) {
  return separator(X, i).degree;
}

template <ExactField F>
std::vector<std::size_t> separator_degrees(const PointSet<F>& X) {
  if (X.size() < 2) throw Error(ErrorCode::singleton_set, "separators need at least two points");
  std::vector<std::size_t> degrees(X.size(), 0);
  std::size_t open = X.size();
  for (std::size_t a = 1; open > 0; ++a) {
    auto m = evaluation_matrix(X, a);
    auto r = rank(m);
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (degrees[i] == 0 && row_is_essential(m, i, r)) {
        degrees[i] = a;
        --open;
      }
    }
  }
  return degrees;
}

template <ExactField F>
std::size_t v_number(const PointSet<F>& X) {
  auto degrees = separator_degrees(X);
  return *std::min_element(degrees.begin(), degrees.end());
}

namespace {

template <ExactField F>
bool avoids_all_points(const PointSet<F>& X, std::span<const typename F::value_type> coeffs) {
  const F& f = X.field();
  for (const auto& p : X.points()) {
    typename F::value_type acc = f.zero();
    for (std::size_t l = 0; l < coeffs.size(); ++l) acc = f.add(acc, f.mul(coeffs[l], p[l]));
    if (f.is_zero(acc)) return false;
  }
  return true;
}

// Projective linear forms over F_p indexed 0 .. (p^k-1)/(p-1) - 1: block `lead` holds the
// p^(k-1-lead) vectors with zeros before position lead and a 1 at lead.
std::vector<std::uint32_t> decode_projective(std::uint64_t index, std::size_t k, std::uint32_t p) {
  std::vector<std::uint32_t> coeffs(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::uint64_t block = 1;
    for (std::size_t i = lead + 1; i < k; ++i) block *= p;
    if (index < block) {
      coeffs[lead] = 1;
      for (std::size_t i = k; i-- > lead + 1;) {
        coeffs[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
      }
      return coeffs;
    }
    index -= block;
  }
  return coeffs;
}

std::optional<std::uint64_t> projective_count(std::size_t k, std::uint32_t p) {
  unsigned __int128 total = 0, power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += power;
    power *= p;
    if (total > (unsigned __int128)(UINT64_MAX >> 1)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

template <ExactField F>
std::vector<typename F::value_type> moment_coeffs(const F& field, std::size_t k,
                                                  const typename F::value_type& t) {
  std::vector<typename F::value_type> c;
  typename F::value_type power = field.one();
  for (std::size_t l = 0; l < k; ++l) {
    c.push_back(power);
    power = field.mul(power, t);
  }
  return c;
}

}  // namespace

template <ExactField F>
PolyVec<F> find_nzd_linear_form(const PointSet<F>& X, std::uint64_t seed) {
  const F& field = X.field();
  const std::size_t k = X.k();
  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint32_t p = field.modulus();
    if (auto count = projective_count(k, p)) {
      std::uint64_t s = seed;
      std::uint64_t offset = splitmix64(s) % *count;
      for (std::uint64_t j = 0; j < *count; ++j) {
        auto coeffs = decode_projective((offset + j) % *count, k, p);
        if (avoids_all_points(X, std::span<const std::uint32_t>(coeffs))) {
          return linear_form(field, std::move(coeffs));
        }
      }
    } else {
      // too many forms to index; the moment curve succeeds whenever p > n(k-1)
      for (std::uint64_t j = 0; j < p; ++j) {
        auto coeffs = moment_coeffs(field, k, field.from_int(static_cast<std::int64_t>((seed + j) % p)));
        if (avoids_all_points(X, std::span<const std::uint32_t>(coeffs))) {
          return linear_form(field, std::move(coeffs));
        }
      }
    }
    throw Error(ErrorCode::field_too_small,
                "every linear form over F_" + std::to_string(p) +
                    " vanishes at some point of X; supply a larger prime");
  } else {
    // each point rules out at most k-1 values of t
    for (std::uint64_t t = seed + 1;; ++t) {
      auto coeffs = moment_coeffs(field, k, field.from_int(static_cast<std::int64_t>(t)));
      if (avoids_all_points(X, std::span<const typename F::value_type>(coeffs))) {
        return linear_form(field, std::move(coeffs));
      }
    }
  }
}

template <ExactField F>
ArtinianReduction<F> artinian_reduction(const PointSet<F>& X, const PolyVec<F>& L) {
  const F& field = X.field();
  const std::size_t k = X.k();
  if (L.degree() != 1 || L.k() != k) {
    throw Error(ErrorCode::bad_linear_form, "L must be a linear form in the ambient variables");
  }
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (field.is_zero(evaluate(L, X[i].coords()))) {
      throw Error(ErrorCode::not_non_zerodivisor,
                  "L vanishes at point " + std::to_string(i) + ", so it is a zerodivisor");
    }
  }
  std::size_t j = k;
  for (std::size_t l = k; l-- > 0;) {
    if (!field.is_zero(L.coeffs[l])) {
      j = l;
      break;
    }
  }
  if (j == k) throw Error(ErrorCode::bad_linear_form, "L is the zero form");

  auto hf = hilbert_profile(X);
  const std::size_t top = hf.regularity() + 1;
  ArtinianReduction<F> red{L, j, {}, {}};
  for (std::size_t i = 0; i <= top; ++i) {
    MonomialBasis reduced_basis(k - 1, i);
    Matrix<F> images(field, 0, reduced_basis.size());
    if (i > 0) {
      auto kernel = kernel_basis(evaluation_matrix(X, i));
      for (std::size_t r = 0; r < kernel.rows(); ++r) {
        auto f = form_from_coeffs(field, k, i,
                                  std::vector<typename F::value_type>(kernel.row(r).begin(),
                                                                      kernel.row(r).end()));
        images.append_row(eliminate_variable(f, L, j).coeffs);
      }
    }
    auto basis = row_space_basis(images);
    red.quotient_dims.push_back(reduced_basis.size() - basis.rows());
    red.J_bases.push_back(std::move(basis));
  }
  for (std::size_t i = 0; i <= top; ++i) {
    std::size_t expected = i == 0 ? 1 : hf.at(i) - hf.at(i - 1);
    if (red.quotient_dims[i] != expected) {
      throw Error(ErrorCode::internal, "Artinian reduction dimension mismatch in degree " +
                                           std::to_string(i));
    }
  }
  return red;
}

template <ExactField F>
std::vector<std::size_t> socle_dimensions(const PointSet<F>& X, const ArtinianReduction<F>& red) {
  const F& field = X.field();
  const std::size_t vars = X.k() - 1;
  const std::size_t top = red.J_bases.size() - 1;  // reg + 1
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < top; ++i) {
    MonomialBasis here(vars, i);
    MonomialBasis next(vars, i + 1);
    auto ech = rref(red.J_bases[i + 1]);
    std::vector<std::size_t> pivot_row_of(next.size(), SIZE_MAX);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) pivot_row_of[ech.pivot_cols[r]] = r;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < next.size(); ++c)
      if (pivot_row_of[c] == SIZE_MAX) free_cols.push_back(c);

    // row m of B: normal forms of x_l * m modulo J_{i+1}, one block per variable
    Matrix<F> B(field, here.size(), vars * free_cols.size());
    std::vector<Exponent> e(vars);
    for (std::size_t m = 0; m < here.size(); ++m) {
      auto em = here.exponent(m);
      for (std::size_t l = 0; l < vars; ++l) {
        std::copy(em.begin(), em.end(), e.begin());
        ++e[l];
        std::size_t c = next.index_of(e);
        const std::size_t base = l * free_cols.size();
        if (pivot_row_of[c] == SIZE_MAX) {
          auto pos = std::lower_bound(free_cols.begin(), free_cols.end(), c) - free_cols.begin();
          B(m, base + pos) = field.one();
        } else {
          auto row = ech.reduced.row(pivot_row_of[c]);
          for (std::size_t q = 0; q < free_cols.size(); ++q) {
            B(m, base + q) = field.neg(row[free_cols[q]]);
          }
        }
      }
    }
    std::size_t colon_dim = here.size() - rank(B);
    dims.push_back(colon_dim - red.J_bases[i].rows());
  }
  return dims;
}

template <ExactField F>
std::size_t min_socle_degree(const PointSet<F>& X, std::uint64_t seed) {
  auto red = artinian_reduction(X, find_nzd_linear_form(X, seed));
  auto dims = socle_dimensions(X, red);
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] > 0) return i;
  throw Error(ErrorCode::internal, "Artinian reduction with an empty socle");
}

template <ExactField F>
InvariantReport analyze_invariants(const PointSet<F>& X, std::uint64_t seed) {
  InvariantReport report;
  report.hf = hilbert_profile(X);
  report.reg = report.hf.regularity();
  report.alpha = alpha(X);
  auto red = artinian_reduction(X, find_nzd_linear_form(X, seed));
  report.socle_dims = socle_dimensions(X, red);
  auto first = std::find_if(report.socle_dims.begin(), report.socle_dims.end(),
                            [](std::size_t d) { return d > 0; });
  if (first == report.socle_dims.end()) {
    throw Error(ErrorCode::internal, "Artinian reduction with an empty socle");
  }
  report.s = static_cast<std::size_t>(first - report.socle_dims.begin());
  if (X.size() >= 2) {
    report.separator_degrees = separator_degrees(X);
    report.v = *std::min_element(report.separator_degrees.begin(), report.separator_degrees.end());
  }
  return report;
}

#define EVALCODE_INSTANTIATE(F)                                                                \
  template std::size_t hilbert_function(const PointSet<F>&, std::size_t);                      \
  template HilbertProfile hilbert_profile(const PointSet<F>&);                                 \
  template std::size_t ideal_dim(const PointSet<F>&, std::size_t);                             \
  template std::size_t alpha(const PointSet<F>&);                                              \
  template std::size_t regularity(const PointSet<F>&);                                         \
  template Separator<F> separator(const PointSet<F>&, std::size_t);                            \
  template std::size_t separator_degree(const PointSet<F>&, std::size_t);                      \
  template std::vector<std::size_t> separator_degrees(const PointSet<F>&);                     \
  template std::size_t v_number(const PointSet<F>&);                                           \
  template PolyVec<F> find_nzd_linear_form(const PointSet<F>&, std::uint64_t);                 \
  template ArtinianReduction<F> artinian_reduction(const PointSet<F>&, const PolyVec<F>&);     \
  template std::vector<std::size_t> socle_dimensions(const PointSet<F>&,                       \
                                                     const ArtinianReduction<F>&);             \
  template std::size_t min_socle_degree(const PointSet<F>&, std::uint64_t);                    \
  template InvariantReport analyze_invariants(const PointSet<F>&, std::uint64_t);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
