#include "seshadri/errors.hpp"

namespace seshadri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::ReversesCone: return "ReversesCone";
    case ErrorCode::NotForward: return "NotForward";
    case ErrorCode::CapNotPositive: return "CapNotPositive";
    case ErrorCode::DenominatorNonPositive: return "DenominatorNonPositive";
    case ErrorCode::BoundNotPositive: return "BoundNotPositive";
    case ErrorCode::PerfectSquare: return "PerfectSquare";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::SquareSelfIntersection: return "SquareSelfIntersection";
    case ErrorCode::WrongRho: return "WrongRho";
    case ErrorCode::BoundNotSubmaximal: return "BoundNotSubmaximal";
    case ErrorCode::WindowCountMismatch: return "WindowCountMismatch";
    case ErrorCode::ZetaNotPositive: return "ZetaNotPositive";
    case ErrorCode::NotNef: return "NotNef";
    case ErrorCode::IrrationalClass: return "IrrationalClass";
    case ErrorCode::GridPointNotNef: return "GridPointNotNef";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric:
    case ErrorCode::WrongSignature:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnknownFormat:
    case ErrorCode::BadFamily:
    case ErrorCode::BadInput:
      return true;
    default:
      return false;
  }
}

}  // namespace seshadri
