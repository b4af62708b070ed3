#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seshadri {

enum class ErrorCode {
  NotSymmetric,
  WrongSignature,
  DimensionMismatch,
  ZeroVector,
  NotIsometry,
  ReversesCone,
  NotForward,
  CapNotPositive,
  DenominatorNonPositive,
  BoundNotPositive,
  PerfectSquare,
  NotPrimitive,
  NotAmple,
  SquareSelfIntersection,
  WrongRho,
  BoundNotSubmaximal,
  WindowCountMismatch,
  ZetaNotPositive,
  NotNef,
  IrrationalClass,
  GridPointNotNef,
  UnknownFormat,
  BadFamily,
  BadInput,
  ResourceLimit,
};

std::string_view to_string(ErrorCode code);

// Validation errors (malformed input) versus precondition errors (well-formed
// input that the requested operation cannot accept). The CLI maps the two
// groups onto different exit codes.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seshadri
