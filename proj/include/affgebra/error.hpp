#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affgebra {

enum class ErrorCode {
  DivisionByZero,
  NonInvertibleSurd,
  NonInvertibleScalar,
  SizeMismatch,
  FieldMismatch,
  SingularMatrix,
  Infeasible,
  ClassViolation,
  NotIdempotent,
  UnknownCheck,
  NotApplicable,
  UnsupportedField,
  ParseError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonInvertibleSurd: return "NonInvertibleSurd";
    case ErrorCode::NonInvertibleScalar: return "NonInvertibleScalar";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ClassViolation: return "ClassViolation";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace affgebra
