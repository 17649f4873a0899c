#include "evalcode/error.hpp"

namespace evalcode {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::invalid_field: return "InvalidField";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::duplicate_point: return "DuplicatePoint";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::bad_linear_form: return "BadLinearForm";
    case ErrorCode::singleton_set: return "SingletonSet";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::field_too_small: return "FieldTooSmall";
    case ErrorCode::not_non_zerodivisor: return "NotNonZeroDivisor";
    case ErrorCode::too_many_codewords: return "TooManyCodewords";
    case ErrorCode::rationals_unsupported: return "RationalsUnsupported";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::unknown_example: return "UnknownExample";
    case ErrorCode::certificate_mismatch: return "CertificateMismatch";
    case ErrorCode::construction_failed: return "ConstructionFailed";
    case ErrorCode::precondition: return "PreconditionFailed";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::internal: return "InternalError";
  }
  return "Unknown";
}

DuplicatePointError::DuplicatePointError(std::size_t first, std::size_t second)
    : Error(ErrorCode::duplicate_point,
            "points " + std::to_string(first) + " and " + std::to_string(second) +
                " normalize to the same projective point"),
      first_(first),
      second_(second) {}

}  // namespace evalcode
