#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpc {

enum class ErrorCode {
  kNonPrimeDimension,
  kConstructionFailure,
  kIndexOutOfRange,
  kInvalidDistribution,
  kInvalidState,
  kNonHermitianInput,
  kOutOfTableRange,
  kComponentSingular,
  kSingularRateOnGrid,
  kUnsupportedFamily,
  kStepTooLarge,
  kGridMismatch,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gpc
