#include "peakpoly/roots.hpp"

#include <algorithm>
#include <string>

#include "peakpoly/error.hpp"
#include "peakpoly/families.hpp"

namespace peakpoly {
namespace {

int sign(const Rational& q) { return sgn(q); }

Rational cauchy_bound(const Poly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 2;
}

// Picks a split point of (lo, hi) at which p does not vanish, starting at
// the midpoint.
Rational split_point(const Poly& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  Rational step = (hi - lo) / 4;
  for (int k = 0; p(mid) == 0; ++k) {
    mid = (lo + hi) / 2 + (k % 2 == 0 ? step : -step);
    step /= 2;
  }
  return mid;
}

void isolate(const SturmChain& chain, const Poly& p, const Rational& lo, const Rational& hi, int count,
             int depth, int max_depth, std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  if (depth >= max_depth) {
    throw Error(Errc::kRefinementLimit, "root isolation exceeded " + std::to_string(max_depth) + " bisections");
  }
  const Rational mid = split_point(p, lo, hi);
  const int v_mid = chain.variations(mid);
  const int left = chain.variations(lo) - v_mid;
  isolate(chain, p, lo, mid, left, depth + 1, max_depth, out);
  isolate(chain, p, mid, hi, count - left, depth + 1, max_depth, out);
}

void structure_violation(int n, const std::string& clause) {
  throw Error(Errc::kStructureViolation, "R_" + std::to_string(n) + ": " + clause);
}

// True when point (a root of the combined polynomial inside iv) is a root of q.
bool root_of(const Poly& q, const Interval& iv) {
  if (iv.lo == iv.hi) return q(iv.lo) == 0;
  return count_roots_in(q, iv.lo, iv.hi) == 1;
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) return;
  polys_.push_back(primitive_part(p));
  Poly d = derivative(p);
  if (d.is_zero()) return;
  polys_.push_back(primitive_part(d));
  for (;;) {
    const Poly& a = polys_[polys_.size() - 2];
    const Poly& b = polys_.back();
    Poly r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    polys_.push_back(primitive_part(-r));
  }
}

bool SturmChain::squarefree() const { return !polys_.empty() && polys_.back().size() == 1; }

int SturmChain::variations(const Rational& at) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : polys_) {
    const int s = sign(q(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int multiplicity_at(const Poly& p, const Rational& r) {
  if (p.is_zero()) throw Error(Errc::kInvalidArgument, "multiplicity in the zero polynomial");
  const Poly factor = Poly(std::vector<Rational>{-r, Rational(1)});
  int m = 0;
  Poly cur = p;
  for (;;) {
    auto [q, rem] = divmod(cur, factor);
    if (!rem.is_zero()) return m;
    ++m;
    cur = std::move(q);
  }
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  return gcd(p, derivative(p)).size() <= 1;
}

Poly squarefree_part(const Poly& p) {
  if (p.size() <= 1) return p;
  return exact_div(p, gcd(p, derivative(p)));
}

int count_roots_in(const Poly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(Errc::kInvalidArgument, "need a < b");
  if (p.is_zero()) throw Error(Errc::kInvalidArgument, "zero polynomial has no isolated roots");
  if (p(a) == 0 || p(b) == 0) {
    throw Error(Errc::kEndpointIsRoot, "endpoint " + (p(a) == 0 ? a : b).get_str() + " is a root");
  }
  const SturmChain chain(p);
  if (p.size() > 1 && !chain.squarefree()) throw Error(Errc::kNonSquarefreeInput, to_string(p));
  return chain.variations(a) - chain.variations(b);
}

std::vector<Interval> isolate_roots(const Poly& p, int max_depth) {
  if (p.size() <= 1) return {};
  const Rational bound = cauchy_bound(p);
  return isolate_roots_in(p, -bound, bound, max_depth);
}

std::vector<Interval> isolate_roots_in(const Poly& p, const Rational& a, const Rational& b, int max_depth) {
  if (p.size() <= 1) return {};
  const int total = count_roots_in(p, a, b);
  const SturmChain chain(p);
  std::vector<Interval> out;
  isolate(chain, p, a, b, total, 0, max_depth, out);
  return out;
}

Interval refine(const Poly& p, Interval iv, const Rational& width, int max_depth) {
  int lo_sign = sign(p(iv.lo));
  for (int depth = 0; iv.hi - iv.lo > width; ++depth) {
    if (depth >= max_depth) throw Error(Errc::kRefinementLimit, "refinement exceeded bisection bound");
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sign(p(mid));
    if (s == 0) return {mid, mid};
    if (s == lo_sign) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
    lo_sign = sign(p(iv.lo));
  }
  return iv;
}

RootReport verify_root_structure(int n, int max_depth) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  RootReport report;
  report.n = n;
  const Poly r = r_poly(n);
  report.mult_minus1 = multiplicity_at(r, Rational(-1));
  if (report.mult_minus1 != n / 2 + 1) {
    structure_violation(n, "multiplicity of -1 is " + std::to_string(report.mult_minus1) + ", expected " +
                               std::to_string(n / 2 + 1));
  }
  try {
    report.g = g_poly(n);
  } catch (const Error& e) {
    structure_violation(n, std::string("G_n coefficients: ") + e.what());
  }
  const int expected_simple = (n + 1) / 2 - 1;
  const int deg = static_cast<int>(report.g.degree().value_or(0));
  if (deg != expected_simple) {
    structure_violation(n, "deg G_n = " + std::to_string(deg) + ", expected " + std::to_string(expected_simple));
  }
  if (!is_squarefree(report.g)) structure_violation(n, "G_n is not squarefree");
  if (report.g(Rational(-1)) == 0) structure_violation(n, "G_n vanishes at -1");
  const int in_range = count_roots_in(report.g, Rational(-1), Rational(0));
  const int real_total = static_cast<int>(isolate_roots(report.g, max_depth).size());
  if (in_range != deg || real_total != deg) {
    structure_violation(n, std::to_string(in_range) + " zeros in (-1,0) and " + std::to_string(real_total) +
                               " real zeros for degree " + std::to_string(deg));
  }
  report.isolating_intervals = isolate_roots_in(report.g, Rational(-1), Rational(0), max_depth);
  report.all_in_range = std::all_of(report.isolating_intervals.begin(), report.isolating_intervals.end(),
                                    [](const Interval& iv) { return iv.lo >= -1 && iv.hi <= 0; });
  if (!report.all_in_range) structure_violation(n, "isolating interval escapes (-1,0)");
  return report;
}

InterlacingReport verify_interlacing(int n, int max_depth) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  const Poly lower = r_poly(n);
  const Poly upper = r_poly(n + 1);
  const Rational minus_one(-1);
  const int m_lower = multiplicity_at(lower, minus_one);
  const int m_upper = multiplicity_at(upper, minus_one);
  const Poly one_plus_x{1, 1};
  const Poly g_lower = exact_div(lower, pow(one_plus_x, static_cast<unsigned>(m_lower)));
  const Poly g_upper = exact_div(upper, pow(one_plus_x, static_cast<unsigned>(m_upper)));
  if (!is_squarefree(g_lower) || !is_squarefree(g_upper)) {
    throw Error(Errc::kNonSquarefreeInput, "G_" + std::to_string(n) + " or G_" + std::to_string(n + 1));
  }

  // Isolate every distinct zero of both polynomials at once; common zeros
  // then share an interval and stay comparable.
  const Poly combined = squarefree_part(one_plus_x * g_lower * g_upper);
  std::vector<Interval> intervals = isolate_roots(combined, max_depth);
  std::reverse(intervals.begin(), intervals.end());

  InterlacingReport report;
  report.n = n;
  for (const Interval& iv : intervals) {
    InterlacingPoint pt;
    if (iv.lo < minus_one && minus_one < iv.hi) {
      pt.where = {minus_one, minus_one};
      pt.mult_lower = m_lower;
      pt.mult_upper = m_upper;
    } else {
      pt.where = iv;
      pt.mult_lower = g_lower.size() > 1 && root_of(g_lower, iv) ? 1 : 0;
      pt.mult_upper = g_upper.size() > 1 && root_of(g_upper, iv) ? 1 : 0;
    }
    report.points.push_back(pt);
  }

  // Expand to the zero sequences (as indices into the decreasing point list).
  std::vector<std::size_t> r;
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    r.insert(r.end(), static_cast<std::size_t>(report.points[i].mult_lower), i);
    s.insert(s.end(), static_cast<std::size_t>(report.points[i].mult_upper), i);
  }
  const auto fail = [n](const std::string& why) {
    throw Error(Errc::kInterlacingViolation,
                "R_" + std::to_string(n) + " sep R_" + std::to_string(n + 1) + ": " + why);
  };
  if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n + 1) fail("not all zeros are real");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (s[i] > r[i]) fail("s_" + std::to_string(i + 1) + " < r_" + std::to_string(i + 1));
    if (r[i] > s[i + 1]) fail("r_" + std::to_string(i + 1) + " < s_" + std::to_string(i + 2));
  }
  return report;
}

CltStats clt_stats(int n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  const Poly r = r_poly(n);
  const Poly d1 = derivative(r);
  const Poly d2 = derivative(d1);
  const Rational one(1);
  CltStats s;
  s.n = n;
  s.value_at_one = r(one).get_num();
  s.first_derivative_at_one = d1(one).get_num();
  s.second_derivative_at_one = d2(one).get_num();
  s.mu = Rational(s.first_derivative_at_one, s.value_at_one);
  s.mu.canonicalize();
  Rational ratio2(s.second_derivative_at_one, s.value_at_one);
  ratio2.canonicalize();
  s.sigma2 = s.mu + ratio2 - s.mu * s.mu;

  const Integer fact = factorial(static_cast<unsigned>(n));
  if (s.value_at_one != 2 * fact) structure_violation(n, "R_n(1) != 2 n!");
  if (n >= 2 && 3 * s.first_derivative_at_one != (4 * n - 2) * fact) {
    structure_violation(n, "R_n'(1) != (4n-2) n!/3");
  }
  if (n >= 4 && 45 * s.second_derivative_at_one != (40 * n * n - 84 * n + 56) * fact) {
    structure_violation(n, "R_n''(1) != n!(40n^2-84n+56)/45");
  }
  return s;
}

ModeReport mode_check(int n) {
  if (n < 2) throw Error(Errc::kInvalidArgument, "n must be >= 2");
  const auto row = r_triangle(n).row(n);
  ModeReport m;
  m.n = n;
  m.max_value = *std::max_element(row.begin(), row.end());
  for (int k = 0; k < static_cast<int>(row.size()); ++k) {
    if (row[static_cast<std::size_t>(k)] == m.max_value) m.maxima.push_back(k);
  }
  m.argmax = m.maxima.front();
  m.tie = m.maxima.size() > 1;
  m.bracket_lo = (2 * n - 1) / 3;
  m.bracket_hi = (2 * n - 1 + 2) / 3;
  m.in_bracket = std::all_of(m.maxima.begin(), m.maxima.end(),
                             [&](int k) { return m.bracket_lo <= k && k <= m.bracket_hi; });
  return m;
}

}  // namespace peakpoly
