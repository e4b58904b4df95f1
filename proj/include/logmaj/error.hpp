#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmaj {

enum class ErrorCode {
  NonConvergence,
  SingularMatrix,
  NotPsd,
  NotHermitian,
  UnsupportedShape,
  LengthMismatch,
  DimMismatch,
  InvalidP,
  BadK,
  BadSpec,
  NonConvergedLimit,
  UnknownId,
  EmptyDomain,
  DomainViolation,
  WrongStatus,
  ReproductionMismatch,
  BadFormat,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::NonConvergedLimit: return "NonConvergedLimit";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::WrongStatus: return "WrongStatus";
    case ErrorCode::ReproductionMismatch: return "ReproductionMismatch";
    case ErrorCode::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace logmaj
