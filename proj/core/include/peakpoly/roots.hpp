#pragma once

#include <span>
#include <vector>

#include "peakpoly/poly.hpp"
#include "peakpoly/rational.hpp"

namespace peakpoly {

inline constexpr int kDefaultMaxBisections = 128;

/// Sturm chain p, p', -rem(p, p'), ... with every member scaled to a
/// primitive integer polynomial by a positive factor.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  std::span<const Poly> polys() const { return polys_; }
  // True when the chain ends in a nonzero constant, i.e. gcd(p, p') = 1.
  bool squarefree() const;
  // Sign changes of the chain evaluated at `at`, zeros skipped.
  int variations(const Rational& at) const;

 private:
  std::vector<Poly> polys_;
};

// Open interval (lo, hi) holding exactly one real root.
struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Largest m with (x - r)^m dividing p. Throws Errc::kInvalidArgument for p = 0.
int multiplicity_at(const Poly& p, const Rational& r);

bool is_squarefree(const Poly& p);
// p / gcd(p, p')
Poly squarefree_part(const Poly& p);

// Distinct real roots of the squarefree p in (a, b].
// Throws Errc::kEndpointIsRoot, Errc::kNonSquarefreeInput, Errc::kInvalidArgument (a >= b).
int count_roots_in(const Poly& p, const Rational& a, const Rational& b);

// Isolating intervals, in increasing order, for every real root of the
// squarefree p. Throws Errc::kRefinementLimit past max_depth bisections.
std::vector<Interval> isolate_roots(const Poly& p, int max_depth = kDefaultMaxBisections);
// Same, restricted to roots in (a, b]; p(a) and p(b) must be nonzero.
std::vector<Interval> isolate_roots_in(const Poly& p, const Rational& a, const Rational& b,
                                       int max_depth = kDefaultMaxBisections);

// Shrinks an isolating interval of a simple root until hi - lo <= width.
Interval refine(const Poly& p, Interval iv, const Rational& width, int max_depth = kDefaultMaxBisections);

/// Zero structure of R_n = (1+x)^m G_n.
struct RootReport {
  int n = 0;
  int mult_minus1 = 0;
  Poly g;
  std::vector<Interval> isolating_intervals;  // one per simple zero, each inside (-1, 0)
  bool all_in_range = false;
};

// Certifies that -1 has multiplicity floor(n/2)+1 in R_n, that G_n has positive
// integer coefficients and ceil(n/2)-1 simple zeros all in (-1, 0), and that
// R_n therefore has n real zeros. Throws Errc::kStructureViolation naming the
// failed clause.
RootReport verify_root_structure(int n, int max_depth = kDefaultMaxBisections);

struct InterlacingPoint {
  Interval where;      // degenerate (lo == hi) for exact rational points such as -1
  int mult_lower = 0;  // multiplicity as a zero of R_n
  int mult_upper = 0;  // multiplicity as a zero of R_{n+1}
};

struct InterlacingReport {
  int n = 0;
  std::vector<InterlacingPoint> points;  // distinct zeros, decreasing
};

// Certifies R_n sep R_{n+1}: with zeros r_1 >= r_2 >= ... of R_n and
// s_1 >= s_2 >= ... of R_{n+1}, s_1 >= r_1 >= s_2 >= r_2 >= ...
// Throws Errc::kInterlacingViolation or Errc::kNonSquarefreeInput.
InterlacingReport verify_interlacing(int n, int max_depth = kDefaultMaxBisections);

struct CltStats {
  int n = 0;
  Integer value_at_one;  // R_n(1)
  Integer first_derivative_at_one;
  Integer second_derivative_at_one;
  Rational mu;      // R_n'(1) / R_n(1)
  Rational sigma2;  // mu + R_n''(1)/R_n(1) - mu^2
};

// Also checks R_n(1) = 2 n!, R_n'(1) = (4n-2) n!/3 for n >= 2 and
// R_n''(1) = n! (40n^2 - 84n + 56)/45 for n >= 4 (Errc::kStructureViolation).
CltStats clt_stats(int n);

struct ModeReport {
  int n = 0;
  int argmax = 0;            // smallest maximizing index
  std::vector<int> maxima;   // all maximizing indices
  Integer max_value;
  bool tie = false;
  int bracket_lo = 0;        // floor((2n-1)/3)
  int bracket_hi = 0;        // ceil((2n-1)/3)
  bool in_bracket = false;   // every maximizing index lies in the bracket
};

ModeReport mode_check(int n);

}  // namespace peakpoly
