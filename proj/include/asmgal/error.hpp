#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asmgal {

enum class ErrorCode {
  NonPrime,
  DegreeOutOfRange,
  DivisionByZero,
  ContextMismatch,
  BadBase,
  ZeroPolynomial,
  CoincidentPoints,
  DegenerateLine,
  NotOnHyperplane,
  PrecisionTooSmall,
  PrecisionExhausted,
  ExtensionBoundExceeded,
  DegenerateConstraint,
  BaseOnBranchTooSmallField,
  NotClosed,
  UnknownClass,
  CountMismatch,
  FalsePositive,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::NotOnHyperplane: return "NotOnHyperplane";
    case ErrorCode::PrecisionTooSmall: return "PrecisionTooSmall";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ExtensionBoundExceeded: return "ExtensionBoundExceeded";
    case ErrorCode::DegenerateConstraint: return "DegenerateConstraint";
    case ErrorCode::BaseOnBranchTooSmallField: return "BaseOnBranchTooSmallField";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::FalsePositive: return "FalsePositive";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace asmgal
