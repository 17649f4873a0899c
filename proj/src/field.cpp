#include "evalcode/field.hpp"

#include <cctype>

namespace evalcode {

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw Error(ErrorCode::invalid_field,
                "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  FieldSpec spec;
  spec.kind = Kind::prime;
  spec.p = static_cast<std::uint32_t>(p);
  return spec;
}

std::string FieldSpec::name() const {
  return is_prime() ? "F_" + std::to_string(p) : std::string("Q");
}

PrimeField::PrimeField(std::uint64_t p) : p_(FieldSpec::prime(p).p) {}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<value_type>(r.get_ui());
}

PrimeField::value_type PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  value_type d = from_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::division_by_zero,
                "denominator " + den.get_str() + " vanishes in F_" + std::to_string(p_));
  }
  return div(from_integer(num), d);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero in Q");
  value_type r = 1 / a;
  return r;
}

RationalField::value_type RationalField::div(const value_type& a, const value_type& b) const {
  if (sgn(b) == 0) throw Error(ErrorCode::division_by_zero, "division by zero in Q");
  value_type r = a / b;
  return r;
}

RationalField::value_type RationalField::from_int(std::int64_t v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return mpq_class(z);
}

RationalField::value_type RationalField::from_fraction(const mpz_class& num,
                                                       const mpz_class& den) const {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string RationalField::to_string(const value_type& a) const {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

namespace {

mpz_class parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorCode::parse_error, "malformed integer '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorCode::parse_error, "malformed integer '" + text + "'");
    }
  }
  return mpz_class(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace

template <ExactField F>
typename F::value_type parse_scalar(const F& field, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return field.from_integer(parse_integer(text));
  return field.from_fraction(parse_integer(text.substr(0, slash)),
                             parse_integer(text.substr(slash + 1)));
}

template PrimeField::value_type parse_scalar(const PrimeField&, const std::string&);
template RationalField::value_type parse_scalar(const RationalField&, const std::string&);

}  // namespace evalcode
