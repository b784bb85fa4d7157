#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regge {

enum class ErrorCode {
  NonPositiveLength,
  NegativeAlpha0,
  NonPositiveAlpha,
  InconsistentRealFlag,
  InvalidPotential,
  OutOfDomain,
  ToleranceNotMet,
  NoConvergence,
  BoundaryZero,
  NewtonDivergence,
  MultiplicityCap,
  DegenerateCase,
  DegenerateSigma,
  InconsistentInput,
  LimitNotConverged,
  BranchAmbiguity,
  ZeroAtOrigin,
  MisalignedInput,
  SignViolation,
  InterlacingViolation,
  TruncationDominates,
  Overflow,
  InvalidArgument,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace regge
