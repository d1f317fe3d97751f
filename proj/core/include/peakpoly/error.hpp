#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace peakpoly {

enum class Errc {
  kNonzeroRemainder,
  kDivisionByZeroPoly,
  kClearPowerTooSmall,
  kNotAPermutation,
  kNotASignedPermutation,
  kLimitExceeded,
  kInsufficientArguments,
  kConstantTermNonzero,
  kNonpositiveCoefficient,
  kUnknownFamily,
  kOrderExceedsComputedFamilies,
  kToleranceExceeded,
  kPrecisionInsufficient,
  kEndpointIsRoot,
  kStructureViolation,
  kInterlacingViolation,
  kNonSquarefreeInput,
  kRefinementLimit,
  kInvalidArgument,
};

std::string_view to_string(Errc code);

// Every failing operation in the library throws this, carrying a stable code
// so callers (the CLI in particular) can map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace peakpoly
