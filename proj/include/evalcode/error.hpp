#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace evalcode {

enum class ErrorCode {
  division_by_zero,
  invalid_field,
  zero_vector,
  duplicate_point,
  dimension_mismatch,
  bad_linear_form,
  singleton_set,
  too_large,
  field_too_small,
  not_non_zerodivisor,
  too_many_codewords,
  rationals_unsupported,
  out_of_range,
  unknown_example,
  certificate_mismatch,
  construction_failed,
  precondition,
  parse_error,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by point_set when two rows normalize to the same projective point.
class DuplicatePointError : public Error {
 public:
  DuplicatePointError(std::size_t first, std::size_t second);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace evalcode
