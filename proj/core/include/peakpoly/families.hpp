#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "peakpoly/perm_oracle.hpp"
#include "peakpoly/poly.hpp"
#include "peakpoly/rational.hpp"

namespace peakpoly {

enum class TriangleFamily { kR, kW, kWl };

std::string_view to_string(TriangleFamily family);

/// Integer number triangle. R rows start at n = 0; W and W^l rows start at
/// n = 1. Row n of R has n + 1 entries, of W floor((n-1)/2) + 1 and of W^l
/// floor(n/2) + 1.
struct CoeffTriangle {
  TriangleFamily family = TriangleFamily::kR;
  int first_row = 0;
  std::vector<std::vector<Integer>> rows;

  int last_row() const { return first_row + static_cast<int>(rows.size()) - 1; }
  const std::vector<Integer>& row(int n) const { return rows.at(static_cast<std::size_t>(n - first_row)); }
  std::vector<Integer>& row(int n) { return rows.at(static_cast<std::size_t>(n - first_row)); }
};

// Rows 0..nmax of R_{n,k} from R_{n+1,k} = (k+1) R_{n,k} + (n-k+2) R_{n,k-2}.
CoeffTriangle r_triangle(int nmax);

// Rows 1..nmax of the interior-peak (W) and left-peak (W^l) triangles.
std::pair<CoeffTriangle, CoeffTriangle> w_triangles(int nmax);

// R_n(x) from R_{n+1} = (1 + n x^2) R_n + x (1 - x^2) R_n'.
Poly r_poly(int n);
// R_0 .. R_nmax.
std::vector<Poly> r_polys(int nmax);

// W_1 .. W_nmax (index 0 unused, zero) from the polynomial recurrence
// W_{n+1} = (n x - x + 2) W_n + 2x(1 - x) W_n'.
std::vector<Poly> w_polys(int nmax);
// W^l_1 .. W^l_nmax from W^l_{n+1} = (n x + 1) W^l_n + 2x(1 - x) W^l_n'.
std::vector<Poly> wl_polys(int nmax);

// x W(x^2) + W^l(x^2): the R polynomial assembled from the two peak rows.
Poly interleave(std::span<const Integer> w_row, std::span<const Integer> wl_row);

/// Derivative polynomials of tan and sec: D^n tan = P_n(tan) and
/// D^n sec = sec * Q_n(tan), entries 0..nmax.
struct DerivativePolys {
  std::vector<Poly> p;
  std::vector<Poly> q;
};
DerivativePolys derivative_polys(int nmax);

// Eulerian polynomial A_n (A_0 = 1) from A_{n+1} = (1 + n x) A_n + x(1 - x) A_n'.
Poly eulerian(int n);
std::vector<Poly> eulerian_polys(int nmax);

struct SignedEulerian {
  Poly c;        // C_n: des_b distribution
  Poly c_tilde;  // C~_n: ades distribution
};

// C_n and C~_n by enumeration. Throws Errc::kLimitExceeded past the oracle cap.
SignedEulerian signed_eulerian(int n, const OracleConfig& config = {});

// C(x^2) + C~(x^2)/x. Throws Errc::kConstantTermNonzero when C~(0) != 0.
Poly t_poly_from(const SignedEulerian& s);
// T_n from the enumerated signed Eulerian pair.
Poly t_poly(int n, const OracleConfig& config = {});

// sum_k p_k (4x)^k (1+x)^(total_power - 2k); requires total_power >= 2 deg p.
// This is (1+x)^total_power * p(4x/(1+x)^2) without denominators.
Poly quadratic_cleared(const Poly& p, unsigned total_power);

// C_n and C~_n rebuilt from the peak polynomials:
// C_n = sum_k W^l_{n,k} (4x)^k (1+x)^(n-2k) and
// C~_n = 2x sum_k W_{n,k} (4x)^k (1+x)^(n-1-2k).
SignedEulerian signed_eulerian_from_peaks(int n, const Poly& w, const Poly& wl);

// Polynomial forms behind the tan/sec to peak dictionary, in the variable y:
// sum_k W_{n,k} y^(n-2k-1) (1+y^2)^(k+1) and sum_k W^l_{n,k} y^(n-2k) (1+y^2)^k.
Poly p_from_peaks(int n, const Poly& w);
Poly q_from_peaks(int n, const Poly& wl);

// E_0 .. E_nmax read off tan x + sec x, with sec obtained by inverting the
// cosine series.
std::vector<Integer> euler_numbers(int nmax);

/// Tangent and secant numbers of order k:
/// tan^k x = sum T(n,k) x^n/n! and sec x tan^k x = sum S(n,k) x^n/n!.
/// Indexed [n][k] for 0 <= n <= nmax, 0 <= k <= kmax.
struct OrderTables {
  std::vector<std::vector<Integer>> tangent;
  std::vector<std::vector<Integer>> secant;
};
OrderTables tangent_secant_orders(int nmax, int kmax);

// P_n and Q_n rebuilt from the order-k tables.
DerivativePolys cvijovic_reconstruct(int n);

// Partial Bell polynomial B_{n,k}(xs[0], xs[1], ...), xs[i-1] standing for x_i.
// Throws Errc::kInsufficientArguments when k >= 1 and xs.size() < n - k + 1.
Poly bell_partial(int n, int k, std::span<const Poly> xs);

// Stirling numbers of the second kind, as B_{n,k}(1, 1, 1, ...).
Integer stirling2(int n, int k);

// x_i = (1 - x^2)^floor((i-1)/2), i = 1..count.
std::vector<Poly> bell_peak_arguments(int count);

// R_{n+1} = sum_{k=1}^n (-1)^(n-k) k! (1+x)^(k+1) B_{n,k} at the peak arguments.
Poly bell_formula_r(int n);

// sum_{k=0}^n (-1)^(n-k) k! S(n,k) == 1.
bool x0_reduction_check(int n);
// sum_{k=1}^n (-1)^(n-k) k! 2^k B_{n,k}(1,1,0,0,...) == (n+1)!.
bool x1_reduction_check(int n);

// R_n / (1+x)^(floor(n/2)+1). Throws Errc::kNonzeroRemainder if the division
// is inexact and Errc::kNonpositiveCoefficient unless every coefficient is a
// positive integer.
Poly g_poly(int n);

}  // namespace peakpoly
