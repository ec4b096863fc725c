#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace troplith {

enum class ErrorCode {
  InvalidArgument,
  Malformed,
  DimensionMismatch,
  Empty,
  NotAComplex,
  NotBalanced,
  NotSimplicial,
  NotIntegral,
  NonGeneric,
  OracleIncomplete,
  LoopGuard,
  Unsupported,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Malformed: return "MALFORMED_INPUT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Empty: return "EMPTY";
    case ErrorCode::NotAComplex: return "NOT_A_COMPLEX";
    case ErrorCode::NotBalanced: return "NOT_BALANCED";
    case ErrorCode::NotSimplicial: return "NOT_SIMPLICIAL";
    case ErrorCode::NotIntegral: return "NOT_INTEGRAL";
    case ErrorCode::NonGeneric: return "NONGENERIC";
    case ErrorCode::OracleIncomplete: return "ORACLE_INCOMPLETE";
    case ErrorCode::LoopGuard: return "LOOP_GUARD";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace troplith
