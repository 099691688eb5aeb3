#include "gpc/error.h"

namespace gpc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeDimension: return "NonPrimeDimension";
    case ErrorCode::kConstructionFailure: return "ConstructionFailure";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kNonHermitianInput: return "NonHermitianInput";
    case ErrorCode::kOutOfTableRange: return "OutOfTableRange";
    case ErrorCode::kComponentSingular: return "ComponentSingular";
    case ErrorCode::kSingularRateOnGrid: return "SingularRateOnGrid";
    case ErrorCode::kUnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::kStepTooLarge: return "StepTooLarge";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gpc
