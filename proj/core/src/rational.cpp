#include "peakpoly/rational.hpp"

#include "peakpoly/error.hpp"

namespace peakpoly {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kNonzeroRemainder: return "NonzeroRemainder";
    case Errc::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::kClearPowerTooSmall: return "ClearPowerTooSmall";
    case Errc::kNotAPermutation: return "NotAPermutation";
    case Errc::kNotASignedPermutation: return "NotASignedPermutation";
    case Errc::kLimitExceeded: return "LimitExceeded";
    case Errc::kInsufficientArguments: return "InsufficientArguments";
    case Errc::kConstantTermNonzero: return "ConstantTermNonzero";
    case Errc::kNonpositiveCoefficient: return "NonpositiveCoefficient";
    case Errc::kUnknownFamily: return "UnknownFamily";
    case Errc::kOrderExceedsComputedFamilies: return "OrderExceedsComputedFamilies";
    case Errc::kToleranceExceeded: return "ToleranceExceeded";
    case Errc::kPrecisionInsufficient: return "PrecisionInsufficient";
    case Errc::kEndpointIsRoot: return "EndpointIsRoot";
    case Errc::kStructureViolation: return "StructureViolation";
    case Errc::kInterlacingViolation: return "InterlacingViolation";
    case Errc::kNonSquarefreeInput: return "NonSquarefreeInput";
    case Errc::kRefinementLimit: return "RefinementLimit";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::kInvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer pow2(unsigned n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

std::vector<Integer> to_integers(const std::vector<long>& values) {
  std::vector<Integer> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace peakpoly
