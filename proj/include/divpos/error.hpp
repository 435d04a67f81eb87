#pragma once

#include <stdexcept>
#include <string>

namespace divpos {

// Failure modes of the public operations. Parse/schema problems get their
// own codes so the CLI can map them to its exit statuses.
enum class ErrorCode {
  ParseError,
  SchemaError,
  MixedRadicand,
  DivisionByZero,
  CharZero,
  ArityMismatch,
  DimensionMismatch,
  ZeroClass,
  NotBoundaryClass,
  DegenerateChoice,
  IndependenceViolated,
  NotOverFpbar,
  PreconditionViolated,
  Internal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::MixedRadicand: return "MixedRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CharZero: return "CharZero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::NotBoundaryClass: return "NotBoundaryClass";
    case ErrorCode::DegenerateChoice: return "DegenerateChoice";
    case ErrorCode::IndependenceViolated: return "IndependenceViolated";
    case ErrorCode::NotOverFpbar: return "NotOverFpbar";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace divpos
