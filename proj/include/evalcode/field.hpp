#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "evalcode/error.hpp"

namespace evalcode {

// Runtime description of the scalar field: F_p for a prime p < 2^31, or Q.
struct FieldSpec {
  enum class Kind { prime, rational };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return {}; }

  bool is_prime() const noexcept { return kind == Kind::prime; }
  std::string name() const;  // "F_101" or "Q"

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_number(std::uint64_t n) noexcept;

class PrimeField {
 public:
  using value_type = std::uint32_t;

  // Throws InvalidField unless p is prime and p < 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;  // a, b < 2^31
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // a - b*c
  value_type sub_mul(value_type a, value_type b, value_type c) const noexcept {
    return sub(a, mul(b, c));
  }
  value_type inv(value_type a) const;  // DivisionByZero on 0
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_int(std::int64_t v) const noexcept;
  value_type from_integer(const mpz_class& v) const;
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const;

  // Canonical residue in [0, p).
  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub_mul(const value_type& a, const value_type& b, const value_type& c) const {
    return a - b * c;
  }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const;

  value_type from_int(std::int64_t v) const;
  value_type from_integer(const mpz_class& v) const { return mpq_class(v); }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const;

  // "n" for integers, "n/d" otherwise (reduced, positive denominator).
  std::string to_string(const value_type& a) const;

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept ExactField = std::copyable<F> && std::equality_comparable<F> && requires(const F& f, const typename F::value_type& a,
                                                 std::int64_t i, const mpz_class& z) {
  typename F::value_type;
  { f.spec() } -> std::same_as<FieldSpec>;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub_mul(a, a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.div(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.from_int(i) } -> std::convertible_to<typename F::value_type>;
  { f.from_fraction(z, z) } -> std::convertible_to<typename F::value_type>;
  { f.to_string(a) } -> std::same_as<std::string>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

// Parses "12", "-3" or "3/4" into a field element.
template <ExactField F>
typename F::value_type parse_scalar(const F& field, const std::string& text);

// Invokes fn with a PrimeField or RationalField matching the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime()) return std::forward<Fn>(fn)(PrimeField(spec.p));
  return std::forward<Fn>(fn)(RationalField{});
}

}  // namespace evalcode
