#pragma once

#include <stdexcept>
#include <string>

namespace coop {

// Error taxonomy. Codes marked "validation" indicate malformed inputs or
// configuration; the rest indicate numerical failure at runtime. The CLI
// maps validation -> exit 3, numerical -> exit 2.
enum class ErrorCode {
  // validation
  OutOfRangeSlot,
  DuplicateEdge,
  SelfLoop,
  DuplicateSlot,
  InvalidVertex,
  ShapeError,
  DomainError,
  BoundaryValue,
  UnassignedSlot,
  PriorConflict,
  UnsupportedFamily,
  UnsupportedRule,
  TooLarge,
  InsufficientRows,
  SchemaMismatch,
  BadConfig,
  // numerical
  SingularHessian,
  NonConvergence,
  NotConverged,
  FitFailure,
  DegenerateDenominator,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

  bool is_validation() const {
    switch (code_) {
      case ErrorCode::SingularHessian:
      case ErrorCode::NonConvergence:
      case ErrorCode::NotConverged:
      case ErrorCode::FitFailure:
      case ErrorCode::DegenerateDenominator:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace coop
