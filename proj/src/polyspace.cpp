#include "evalcode/polyspace.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "evalcode/combinatorics.hpp"

namespace evalcode {

namespace {

void fill_exponents(std::size_t k, std::size_t remaining, std::size_t var,
                    std::vector<Exponent>& current, std::vector<Exponent>& out) {
  if (var + 1 == k) {
    current[var] = static_cast<Exponent>(remaining);
    out.insert(out.end(), current.begin(), current.end());
    return;
  }
  for (std::size_t e = remaining + 1; e-- > 0;) {
    current[var] = static_cast<Exponent>(e);
    fill_exponents(k, remaining - e, var + 1, current, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t k, std::size_t degree)
    : k_(k), degree_(degree), count_(monomial_count(static_cast<std::int64_t>(k),
                                                    static_cast<std::int64_t>(degree))) {
  if (k > max_variables && degree > 1) {
    throw Error(ErrorCode::precondition, "forms of degree >= 2 support at most 16 variables");
  }
  if (k == 0) return;  // the single empty monomial when degree == 0, nothing otherwise
  exps_.reserve(count_ * k);
  std::vector<Exponent> current(k, 0);
  fill_exponents(k, degree, 0, current, exps_);
}

std::size_t MonomialBasis::index_of(std::span<const Exponent> e) const {
  if (e.size() != k_) throw Error(ErrorCode::dimension_mismatch, "exponent length mismatch");
  std::size_t total = 0;
  for (auto x : e) total += x;
  if (total != degree_) throw Error(ErrorCode::dimension_mismatch, "exponent degree mismatch");
  // monomials preceding e: those with a larger first exponent, then recurse on the tail
  std::size_t index = 0;
  std::size_t remaining = degree_;
  for (std::size_t var = 0; var + 1 < k_; ++var) {
    std::size_t vars_left = k_ - var - 1;
    for (std::size_t bigger = e[var] + 1; bigger <= remaining; ++bigger) {
      index += monomial_count(static_cast<std::int64_t>(vars_left),
                              static_cast<std::int64_t>(remaining - bigger));
    }
    remaining -= e[var];
  }
  return index;
}

MonomialBasis monomial_basis(std::size_t k, std::size_t degree) { return {k, degree}; }

template <ExactField F>
bool PolyVec<F>::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [&](const auto& c) { return field.is_zero(c); });
}

template <ExactField F>
PolyVec<F> zero_form(const F& field, std::size_t k, std::size_t degree) {
  auto basis = std::make_shared<const MonomialBasis>(k, degree);
  std::vector<typename F::value_type> coeffs(basis->size(), field.zero());
  return {field, std::move(basis), std::move(coeffs)};
}

template <ExactField F>
PolyVec<F> form_from_coeffs(const F& field, std::size_t k, std::size_t degree,
                            std::vector<typename F::value_type> coeffs) {
  auto basis = std::make_shared<const MonomialBasis>(k, degree);
  if (coeffs.size() != basis->size()) {
    throw Error(ErrorCode::dimension_mismatch, "coefficient vector length does not match basis");
  }
  return {field, std::move(basis), std::move(coeffs)};
}

template <ExactField F>
PolyVec<F> linear_form(const F& field, std::vector<typename F::value_type> coeffs) {
  std::size_t k = coeffs.size();
  return form_from_coeffs(field, k, 1, std::move(coeffs));
}

template <ExactField F>
std::vector<typename F::value_type> monomial_values(const F& field, const MonomialBasis& basis,
                                                    std::span<const typename F::value_type> point) {
  if (point.size() != basis.k()) throw Error(ErrorCode::dimension_mismatch, "point length");
  // powers[v][e] = point[v]^e
  std::vector<std::vector<typename F::value_type>> powers(basis.k());
  for (std::size_t v = 0; v < basis.k(); ++v) {
    powers[v].reserve(basis.degree() + 1);
    powers[v].push_back(field.one());
    for (std::size_t e = 1; e <= basis.degree(); ++e) {
      powers[v].push_back(field.mul(powers[v].back(), point[v]));
    }
  }
  std::vector<typename F::value_type> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto e = basis.exponent(i);
    typename F::value_type acc = field.one();
    for (std::size_t v = 0; v < basis.k(); ++v) {
      if (e[v] != 0) acc = field.mul(acc, powers[v][e[v]]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

template <ExactField F>
typename F::value_type evaluate(const PolyVec<F>& f, std::span<const typename F::value_type> point) {
  auto values = monomial_values(f.field, *f.basis, point);
  typename F::value_type acc = f.field.zero();
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc = f.field.add(acc, f.field.mul(values[i], f.coeffs[i]));
  }
  return acc;
}

template <ExactField F>
Matrix<F> evaluation_matrix(const PointSet<F>& X, std::size_t degree) {
  MonomialBasis basis(X.k(), degree);
  Matrix<F> m(X.field(), X.size(), basis.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    auto values = monomial_values(X.field(), basis, X[i].coords());
    std::move(values.begin(), values.end(), m.row(i).begin());
  }
  return m;
}

namespace {

// Full product of two forms. Only used for powers of the substituted linear form.
template <ExactField F>
PolyVec<F> multiply(const PolyVec<F>& f, const PolyVec<F>& g) {
  const F& field = f.field;
  auto out = zero_form(field, f.k(), f.degree() + g.degree());
  std::vector<Exponent> e(f.k());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (field.is_zero(f.coeffs[i])) continue;
    auto ef = f.basis->exponent(i);
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      if (field.is_zero(g.coeffs[j])) continue;
      auto eg = g.basis->exponent(j);
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<Exponent>(ef[v] + eg[v]);
      auto idx = out.basis->index_of(e);
      out.coeffs[idx] = field.add(out.coeffs[idx], field.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return out;
}

}  // namespace

template <ExactField F>
PolyVec<F> eliminate_variable(const PolyVec<F>& f, const PolyVec<F>& L, std::size_t j) {
  const F& field = f.field;
  const std::size_t k = f.k();
  if (L.degree() != 1 || L.k() != k) {
    throw Error(ErrorCode::bad_linear_form, "L must be a linear form in the same variables as f");
  }
  if (j >= k) throw Error(ErrorCode::bad_linear_form, "variable index out of range");
  // linear basis is x_1, ..., x_k in order, so coeffs[l] is the coefficient of x_l
  if (field.is_zero(L.coeffs[j])) {
    throw Error(ErrorCode::bad_linear_form,
                "coefficient of x_" + std::to_string(j + 1) + " in L is zero");
  }
  auto scale = field.neg(field.inv(L.coeffs[j]));
  std::vector<typename F::value_type> sub_coeffs;
  for (std::size_t l = 0; l < k; ++l) {
    if (l != j) sub_coeffs.push_back(field.mul(scale, L.coeffs[l]));
  }
  auto sub = form_from_coeffs(field, k - 1, 1, std::move(sub_coeffs));

  std::vector<PolyVec<F>> powers;
  powers.push_back(form_from_coeffs(field, k - 1, 0, {field.one()}));
  for (std::size_t e = 1; e <= f.degree(); ++e) powers.push_back(multiply(powers.back(), sub));

  auto out = zero_form(field, k - 1, f.degree());
  std::vector<Exponent> e(k - 1);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (field.is_zero(f.coeffs[i])) continue;
    auto ef = f.basis->exponent(i);
    const auto& power = powers[ef[j]];
    for (std::size_t t = 0; t < power.coeffs.size(); ++t) {
      if (field.is_zero(power.coeffs[t])) continue;
      auto et = power.basis->exponent(t);
      for (std::size_t v = 0, w = 0; v < k; ++v) {
        if (v == j) continue;
        e[w] = static_cast<Exponent>(ef[v] + et[w]);
        ++w;
      }
      auto idx = out.basis->index_of(e);
      out.coeffs[idx] = field.add(out.coeffs[idx], field.mul(f.coeffs[i], power.coeffs[t]));
    }
  }
  return out;
}

template <ExactField F>
PolyVec<F> multiply_by_variable(const PolyVec<F>& f, std::size_t l) {
  if (l >= f.k()) throw Error(ErrorCode::out_of_range, "variable index out of range");
  auto out = zero_form(f.field, f.k(), f.degree() + 1);
  std::vector<Exponent> e(f.k());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.field.is_zero(f.coeffs[i])) continue;
    auto ef = f.basis->exponent(i);
    std::copy(ef.begin(), ef.end(), e.begin());
    ++e[l];
    out.coeffs[out.basis->index_of(e)] = f.coeffs[i];
  }
  return out;
}

template <ExactField F>
PolyVec<F> add(const PolyVec<F>& f, const PolyVec<F>& g) {
  if (f.k() != g.k() || f.degree() != g.degree()) {
    throw Error(ErrorCode::dimension_mismatch, "adding forms of different shape");
  }
  PolyVec<F> out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = f.field.add(out.coeffs[i], g.coeffs[i]);
  }
  return out;
}

#define EVALCODE_INSTANTIATE(F)                                                               \
  template struct PolyVec<F>;                                                                 \
  template PolyVec<F> zero_form(const F&, std::size_t, std::size_t);                          \
  template PolyVec<F> linear_form(const F&, std::vector<F::value_type>);                      \
  template PolyVec<F> form_from_coeffs(const F&, std::size_t, std::size_t,                    \
                                       std::vector<F::value_type>);                           \
  template std::vector<F::value_type> monomial_values(const F&, const MonomialBasis&,         \
                                                      std::span<const F::value_type>);        \
  template F::value_type evaluate(const PolyVec<F>&, std::span<const F::value_type>);         \
  template Matrix<F> evaluation_matrix(const PointSet<F>&, std::size_t);                      \
  template PolyVec<F> eliminate_variable(const PolyVec<F>&, const PolyVec<F>&, std::size_t);  \
  template PolyVec<F> multiply_by_variable(const PolyVec<F>&, std::size_t);                   \
  template PolyVec<F> add(const PolyVec<F>&, const PolyVec<F>&);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
