#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "evalcode/matrix.hpp"
#include "evalcode/point_set.hpp"

namespace evalcode {

using Exponent = std::uint16_t;

// Degree-a monomials in k variables, graded-lex with x_1 > x_2 > ... > x_k.
// Within a fixed degree this is plain lex order: x_1^a comes first, x_k^a last.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t k, std::size_t degree);

  std::size_t k() const noexcept { return k_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const Exponent> exponent(std::size_t i) const {
    return {exps_.data() + i * k_, k_};
  }
  // Position of the exponent vector in this basis; computed combinatorially.
  std::size_t index_of(std::span<const Exponent> e) const;

 private:
  std::size_t k_;
  std::size_t degree_;
  std::size_t count_;
  std::vector<Exponent> exps_;
};

MonomialBasis monomial_basis(std::size_t k, std::size_t degree);

// A homogeneous form written in a monomial basis.
template <ExactField F>
struct PolyVec {
  using value_type = typename F::value_type;

  F field;
  std::shared_ptr<const MonomialBasis> basis;
  std::vector<value_type> coeffs;

  std::size_t k() const noexcept { return basis->k(); }
  std::size_t degree() const noexcept { return basis->degree(); }
  bool is_zero() const;

  friend bool operator==(const PolyVec& a, const PolyVec& b) {
    return a.field == b.field && a.basis->k() == b.basis->k() &&
           a.basis->degree() == b.basis->degree() && a.coeffs == b.coeffs;
  }
};

template <ExactField F>
PolyVec<F> zero_form(const F& field, std::size_t k, std::size_t degree);

// L = sum coeffs[l] x_l
template <ExactField F>
PolyVec<F> linear_form(const F& field, std::vector<typename F::value_type> coeffs);

template <ExactField F>
PolyVec<F> form_from_coeffs(const F& field, std::size_t k, std::size_t degree,
                            std::vector<typename F::value_type> coeffs);

// Values of every basis monomial at the given coordinates.
template <ExactField F>
std::vector<typename F::value_type> monomial_values(const F& field, const MonomialBasis& basis,
                                                    std::span<const typename F::value_type> point);

template <ExactField F>
typename F::value_type evaluate(const PolyVec<F>& f, std::span<const typename F::value_type> point);

// n x N_a matrix of ev_a: row i holds the basis monomials at the standard representative of P_i.
template <ExactField F>
Matrix<F> evaluation_matrix(const PointSet<F>& X, std::size_t degree);

// Substitutes x_j := -(1/c_j) sum_{l != j} c_l x_l, where L = sum c_l x_l. Result lives in
// k-1 variables (x_j dropped, later variables shift down). Throws BadLinearForm if c_j = 0.
template <ExactField F>
PolyVec<F> eliminate_variable(const PolyVec<F>& f, const PolyVec<F>& L, std::size_t j);

template <ExactField F>
PolyVec<F> multiply_by_variable(const PolyVec<F>& f, std::size_t l);

template <ExactField F>
PolyVec<F> add(const PolyVec<F>& f, const PolyVec<F>& g);

}  // namespace evalcode
