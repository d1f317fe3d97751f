#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peakpoly/families.hpp"
#include "peakpoly/poly.hpp"

namespace peakpoly {

/// Power series in z truncated after z^order, with coefficients in Q[x].
///
/// Families are stored in exponential normalization: the z^m coefficient of
/// sum_m F_m(x) z^m/m! is F_m(x)/m!.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncSeries(std::size_t order, std::vector<Poly> coeffs);

  // sum_{m <= order} family[m] z^m / m!; missing entries are zero.
  static TruncSeries from_egf(std::span<const Poly> family, std::size_t order);
  static TruncSeries constant(const Poly& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Poly& operator[](std::size_t m) const { return coeffs_[m]; }
  Poly& operator[](std::size_t m) { return coeffs_[m]; }

  // m! times the z^m coefficient.
  Poly egf_term(std::size_t m) const;

  // Binary operations truncate to the smaller order.
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Poly& c, const TruncSeries& s);

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Poly> coeffs_;
};

// d/dz; the result has order one less (order 0 maps to the zero series of order 0).
TruncSeries d_dz(const TruncSeries& s);
// d/dx applied to every coefficient; order unchanged.
TruncSeries d_dx(const TruncSeries& s);
// z * s, truncated at the same order.
TruncSeries shift_z(const TruncSeries& s);
// s(x, c(x) z): the z^m coefficient is multiplied by c^m.
TruncSeries rescale_z(const TruncSeries& s, const Poly& c);
// s(q(x), z).
TruncSeries substitute_x(const TruncSeries& s, const Poly& q);

// q with q * den == num to the common order. den[0] must divide every
// intermediate numerator exactly (Errc::kNonzeroRemainder otherwise).
TruncSeries exact_quotient(const TruncSeries& num, const TruncSeries& den);

/// cosh(z sqrt(w)) and sinh(z sqrt(w))/sqrt(w), both of which are series in
/// z with coefficients polynomial in w.
struct HyperBlocks {
  TruncSeries cosh_part;
  TruncSeries sinh_part;
};
HyperBlocks hyper_blocks(const Poly& w, std::size_t order);

// exp(c z) = sum_m c^m z^m / m!.
TruncSeries exp_series(const Poly& c, std::size_t order);

enum class GfFamily { kA, kW, kWl, kP, kC, kCTilde, kT, kR };

std::string_view to_string(GfFamily family);
// Accepts A, W, WL, P, C, CT, T, R. Throws Errc::kUnknownFamily.
GfFamily parse_gf_family(std::string_view name);
std::span<const GfFamily> all_gf_families();

struct SeriesMismatch {
  std::size_t z_order = 0;
  std::size_t x_index = 0;
  Rational lhs;
  Rational rhs;
};

struct GfVerdict {
  bool pass = true;
  std::optional<SeriesMismatch> mismatch;
};

// Coefficientwise comparison through z^upto; reports the first mismatch.
GfVerdict compare_series(const TruncSeries& lhs, const TruncSeries& rhs, std::size_t upto);

struct GfConfig {
  std::size_t max_order = 40;
};

// Checks the denominator-free product identity for the family to z^order,
// with the family's own series assembled from the recurrence side:
//   A:  A(1 - x e^{z(1-x)}) = (1-x) e^{z(1-x)}
//   W:  W (C_w - S_w) = S_w,  W^l (C_w - S_w) = 1,  w = 1 - x
//   P:  P (C_w - S_w) = 1 + x S_w,  w = 1 - x^2
//   C:  C (1 - x e^{2z(1-x)}) = (1-x) e^{z(1-x)};  C~ (1 - x e^{2z(1-x)}) = 1 - x
//   T:  T (1 - x e^{z(1-x^2)}) = e^{z(1-x^2)} - x
//   R:  R (1 - x + sum_i (-1)^i y_i t^i/i!) = 1 - x^2,  y_i = (1-x^2)^floor((i+1)/2)
// C and C~ (and therefore T) come from the peak polynomials.
// Throws Errc::kOrderExceedsComputedFamilies when order > config.max_order.
GfVerdict verify_gf(GfFamily family, std::size_t order, const GfConfig& config = {});
GfVerdict verify_gf(std::string_view family, std::size_t order, const GfConfig& config = {});

// x + T(x,z) == (1+x) A(x, z(1+x)) through z^order, with T taken from the
// generating-function-sourced signed Eulerian polynomials.
GfVerdict verify_txz_axz(std::size_t order, const GfConfig& config = {});

// x(x^2-1) P_x + (1 - x^2 z) P_z == P + x for P = sum R_n z^n/n!, checked on
// z^0 .. z^(order-1). Requires order >= 2.
GfVerdict verify_pde(std::size_t order, const GfConfig& config = {});

// C_n, C~_n for n = 0..nmax solved out of their generating functions.
std::vector<SignedEulerian> signed_eulerian_from_gf(int nmax);

struct SpotCheck {
  double closed_form = 0;   // rounded for display
  double partial_sum = 0;
  double relative_error = 0;
  double remainder_bound = 0;  // relative bound on the discarded tail
  bool pass = false;
};

// Compares (1-x^2)/(x(cosh z - 1)), z = -t sqrt(1-x^2) + arccosh(1/x), in
// 256-bit binary floating point against sum_{n <= order} R_{n+1}(x0) t0^n/n!.
// Throws Errc::kPrecisionInsufficient if x0 is outside (0,1), |t0| >= 1/4 or
// the tail bound 2(N+2)|t|^(N+1)/(1-|t|)^2 is not below tol/2 relative.
SpotCheck numeric_gf_spotcheck(const Rational& x0, const Rational& t0, std::size_t order, double tol);

}  // namespace peakpoly
