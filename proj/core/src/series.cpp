#include "peakpoly/series.hpp"

#include <algorithm>
#include <array>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "peakpoly/error.hpp"

namespace peakpoly {
namespace {

Rational inv_factorial(std::size_t m) { return Rational(Integer(1), factorial(static_cast<unsigned>(m))); }

void check_order(std::size_t order, const GfConfig& config) {
  if (order > config.max_order) {
    throw Error(Errc::kOrderExceedsComputedFamilies,
                "order " + std::to_string(order) + " > configured maximum " + std::to_string(config.max_order));
  }
}

std::vector<Poly> peak_family(int nmax, bool left) {
  std::vector<Poly> out(static_cast<std::size_t>(nmax + 1));
  out[0] = left ? Poly{1} : Poly{};
  if (nmax < 1) return out;
  const auto [w, wl] = w_triangles(nmax);
  for (int n = 1; n <= nmax; ++n) out[static_cast<std::size_t>(n)] = Poly::from_integers((left ? wl : w).row(n));
  return out;
}

struct SignedFamilies {
  std::vector<Poly> c;
  std::vector<Poly> c_tilde;
  std::vector<Poly> t;
};

SignedFamilies signed_from_peaks(int nmax) {
  SignedFamilies f{{Poly{1}}, {Poly{1}}, {Poly{1}}};
  if (nmax < 1) return f;
  const auto [w, wl] = w_triangles(nmax);
  for (int n = 1; n <= nmax; ++n) {
    auto s = signed_eulerian_from_peaks(n, Poly::from_integers(w.row(n)), Poly::from_integers(wl.row(n)));
    f.t.push_back(t_poly_from(s));
    f.c.push_back(std::move(s.c));
    f.c_tilde.push_back(std::move(s.c_tilde));
  }
  return f;
}

// 1 - x e^{k z (1 - x)}
TruncSeries one_minus_x_exp(int k, std::size_t order) {
  TruncSeries e = exp_series(Poly{k, -k}, order);
  return TruncSeries::constant(Poly{1}, order) - Poly::x() * e;
}

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

}  // namespace

TruncSeries::TruncSeries(std::size_t order, std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::from_egf(std::span<const Poly> family, std::size_t order) {
  TruncSeries s(order);
  for (std::size_t m = 0; m <= order && m < family.size(); ++m) s.coeffs_[m] = family[m] * inv_factorial(m);
  return s;
}

TruncSeries TruncSeries::constant(const Poly& c, std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

Poly TruncSeries::egf_term(std::size_t m) const {
  return coeffs_[m] * Rational(factorial(static_cast<unsigned>(m)));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (std::size_t m = 0; m <= out.order(); ++m) out.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (std::size_t m = 0; m <= out.order(); ++m) out.coeffs_[m] = a.coeffs_[m] - b.coeffs_[m];
  return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncSeries operator*(const Poly& c, const TruncSeries& s) {
  TruncSeries out(s.order());
  for (std::size_t m = 0; m <= s.order(); ++m) out.coeffs_[m] = c * s.coeffs_[m];
  return out;
}

TruncSeries d_dz(const TruncSeries& s) {
  if (s.order() == 0) return TruncSeries(0);
  TruncSeries out(s.order() - 1);
  for (std::size_t m = 0; m <= out.order(); ++m) out[m] = s[m + 1] * Rational(static_cast<unsigned long>(m + 1));
  return out;
}

TruncSeries d_dx(const TruncSeries& s) {
  TruncSeries out(s.order());
  for (std::size_t m = 0; m <= s.order(); ++m) out[m] = derivative(s[m]);
  return out;
}

TruncSeries shift_z(const TruncSeries& s) {
  TruncSeries out(s.order());
  for (std::size_t m = 1; m <= s.order(); ++m) out[m] = s[m - 1];
  return out;
}

TruncSeries rescale_z(const TruncSeries& s, const Poly& c) {
  TruncSeries out(s.order());
  Poly power{1};
  for (std::size_t m = 0; m <= s.order(); ++m) {
    out[m] = s[m] * power;
    power *= c;
  }
  return out;
}

TruncSeries substitute_x(const TruncSeries& s, const Poly& q) {
  TruncSeries out(s.order());
  for (std::size_t m = 0; m <= s.order(); ++m) out[m] = compose(s[m], q);
  return out;
}

TruncSeries exact_quotient(const TruncSeries& num, const TruncSeries& den) {
  TruncSeries q(std::min(num.order(), den.order()));
  for (std::size_t m = 0; m <= q.order(); ++m) {
    Poly rest = num[m];
    for (std::size_t i = 0; i < m; ++i) rest -= q[i] * den[m - i];
    q[m] = exact_div(rest, den[0]);
  }
  return q;
}

HyperBlocks hyper_blocks(const Poly& w, std::size_t order) {
  HyperBlocks h{TruncSeries(order), TruncSeries(order)};
  Poly w_pow{1};
  for (std::size_t m = 0; 2 * m <= order; ++m) {
    h.cosh_part[2 * m] = w_pow * inv_factorial(2 * m);
    if (2 * m + 1 <= order) h.sinh_part[2 * m + 1] = w_pow * inv_factorial(2 * m + 1);
    w_pow *= w;
  }
  return h;
}

TruncSeries exp_series(const Poly& c, std::size_t order) {
  TruncSeries s(order);
  Poly c_pow{1};
  for (std::size_t m = 0; m <= order; ++m) {
    s[m] = c_pow * inv_factorial(m);
    c_pow *= c;
  }
  return s;
}

std::string_view to_string(GfFamily family) {
  switch (family) {
    case GfFamily::kA: return "A";
    case GfFamily::kW: return "W";
    case GfFamily::kWl: return "WL";
    case GfFamily::kP: return "P";
    case GfFamily::kC: return "C";
    case GfFamily::kCTilde: return "CT";
    case GfFamily::kT: return "T";
    case GfFamily::kR: return "R";
  }
  return "?";
}

std::span<const GfFamily> all_gf_families() {
  static constexpr std::array kAll{GfFamily::kA, GfFamily::kW, GfFamily::kWl, GfFamily::kP,
                                   GfFamily::kC, GfFamily::kCTilde, GfFamily::kT, GfFamily::kR};
  return kAll;
}

GfFamily parse_gf_family(std::string_view name) {
  for (GfFamily f : all_gf_families()) {
    if (to_string(f) == name) return f;
  }
  throw Error(Errc::kUnknownFamily, "no generating function for family '" + std::string(name) + "'");
}

GfVerdict compare_series(const TruncSeries& lhs, const TruncSeries& rhs, std::size_t upto) {
  for (std::size_t m = 0; m <= upto; ++m) {
    const Poly& a = lhs[m];
    const Poly& b = rhs[m];
    if (a == b) continue;
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (a.coeff(i) != b.coeff(i)) return {false, SeriesMismatch{m, i, a.coeff(i), b.coeff(i)}};
    }
  }
  return {};
}

GfVerdict verify_gf(GfFamily family, std::size_t order, const GfConfig& config) {
  check_order(order, config);
  const int nmax = static_cast<int>(order);
  const TruncSeries one = TruncSeries::constant(Poly{1}, order);
  switch (family) {
    case GfFamily::kA: {
      const auto a = TruncSeries::from_egf(eulerian_polys(nmax), order);
      const TruncSeries e = exp_series(Poly{1, -1}, order);
      const TruncSeries lhs = a * (one - Poly::x() * e);
      return compare_series(lhs, Poly{1, -1} * e, order);
    }
    case GfFamily::kW:
    case GfFamily::kWl: {
      const bool left = family == GfFamily::kWl;
      const auto series = TruncSeries::from_egf(peak_family(nmax, left), order);
      const auto h = hyper_blocks(Poly{1, -1}, order);
      const TruncSeries lhs = series * (h.cosh_part - h.sinh_part);
      return compare_series(lhs, left ? one : h.sinh_part, order);
    }
    case GfFamily::kP: {
      const auto p = TruncSeries::from_egf(r_polys(nmax), order);
      const auto h = hyper_blocks(Poly{1, 0, -1}, order);
      const TruncSeries lhs = p * (h.cosh_part - h.sinh_part);
      return compare_series(lhs, one + Poly::x() * h.sinh_part, order);
    }
    case GfFamily::kC:
    case GfFamily::kCTilde: {
      const SignedFamilies f = signed_from_peaks(nmax);
      const bool tilde = family == GfFamily::kCTilde;
      const auto series = TruncSeries::from_egf(tilde ? f.c_tilde : f.c, order);
      const TruncSeries lhs = series * one_minus_x_exp(2, order);
      const TruncSeries rhs =
          tilde ? TruncSeries::constant(Poly{1, -1}, order) : Poly{1, -1} * exp_series(Poly{1, -1}, order);
      return compare_series(lhs, rhs, order);
    }
    case GfFamily::kT: {
      const SignedFamilies f = signed_from_peaks(nmax);
      const auto t = TruncSeries::from_egf(f.t, order);
      const TruncSeries e = exp_series(Poly{1, 0, -1}, order);
      const TruncSeries lhs = t * (one - Poly::x() * e);
      return compare_series(lhs, e - TruncSeries::constant(Poly::x(), order), order);
    }
    case GfFamily::kR: {
      // R(x,t) = sum_n R_{n+1} t^n / n!
      const std::vector<Poly> r = r_polys(nmax + 1);
      const auto series = TruncSeries::from_egf(std::span<const Poly>(r).subspan(1), order);
      TruncSeries denom = TruncSeries::constant(Poly{1, -1}, order);
      const Poly one_minus_x2{1, 0, -1};
      for (std::size_t i = 1; i <= order; ++i) {
        Poly y = pow(one_minus_x2, static_cast<unsigned>((i + 1) / 2)) * inv_factorial(i);
        denom[i] = i % 2 == 0 ? y : -y;
      }
      return compare_series(series * denom, TruncSeries::constant(one_minus_x2, order), order);
    }
  }
  throw Error(Errc::kUnknownFamily, "unhandled family");
}

GfVerdict verify_gf(std::string_view family, std::size_t order, const GfConfig& config) {
  return verify_gf(parse_gf_family(family), order, config);
}

std::vector<SignedEulerian> signed_eulerian_from_gf(int nmax) {
  if (nmax < 0) throw Error(Errc::kInvalidArgument, "nmax must be >= 0");
  const auto order = static_cast<std::size_t>(nmax);
  const TruncSeries den = one_minus_x_exp(2, order);
  const TruncSeries c = exact_quotient(Poly{1, -1} * exp_series(Poly{1, -1}, order), den);
  const TruncSeries ct = exact_quotient(TruncSeries::constant(Poly{1, -1}, order), den);
  std::vector<SignedEulerian> out;
  out.reserve(order + 1);
  for (std::size_t m = 0; m <= order; ++m) out.push_back({c.egf_term(m), ct.egf_term(m)});
  return out;
}

GfVerdict verify_txz_axz(std::size_t order, const GfConfig& config) {
  check_order(order, config);
  const auto signed_gf = signed_eulerian_from_gf(static_cast<int>(order));
  std::vector<Poly> t{Poly{1}};
  for (std::size_t n = 1; n <= order; ++n) t.push_back(t_poly_from(signed_gf[n]));
  const TruncSeries lhs =
      TruncSeries::from_egf(t, order) + TruncSeries::constant(Poly::x(), order);
  const Poly one_plus_x{1, 1};
  const auto a = TruncSeries::from_egf(eulerian_polys(static_cast<int>(order)), order);
  const TruncSeries rhs = one_plus_x * rescale_z(a, one_plus_x);
  return compare_series(lhs, rhs, order);
}

GfVerdict verify_pde(std::size_t order, const GfConfig& config) {
  if (order < 2) throw Error(Errc::kInvalidArgument, "PDE check needs order >= 2");
  check_order(order, config);
  const auto p = TruncSeries::from_egf(r_polys(static_cast<int>(order)), order);
  const TruncSeries pz = d_dz(p);
  const TruncSeries lhs = Poly{0, -1, 0, 1} * d_dx(p) + pz - Poly{0, 0, 1} * shift_z(pz);
  const TruncSeries rhs = p + TruncSeries::constant(Poly::x(), order);
  return compare_series(lhs, rhs, order - 1);
}

SpotCheck numeric_gf_spotcheck(const Rational& x0, const Rational& t0, std::size_t order, double tol) {
  if (x0 <= 0 || x0 >= 1) throw Error(Errc::kPrecisionInsufficient, "x0 must lie in (0,1)");
  const Rational abs_t = abs(t0);
  if (abs_t * 4 >= 1) throw Error(Errc::kPrecisionInsufficient, "|t0| must be below 1/4");

  using boost::multiprecision::cosh;
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  const Real x = to_real(x0);
  const Real t = to_real(t0);
  const Real root = sqrt(1 - x * x);
  const Real inv_x = 1 / x;
  const Real arccosh = log(inv_x + sqrt(inv_x * inv_x - 1));
  const Real z = -t * root + arccosh;
  const Real closed = (1 - x * x) / (x * (cosh(z) - 1));

  const std::vector<Poly> r = r_polys(static_cast<int>(order) + 1);
  Rational partial = 0;
  Rational t_pow = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    partial += r[n + 1](x0) * t_pow * inv_factorial(n);
    t_pow *= t0;
  }

  // |R_{n+1}(x0)| <= R_{n+1}(1) = 2 (n+1)! on (0,1), so the tail is at most
  // sum_{n > N} 2 (n+1) |t|^n <= 2 (N+2) |t|^(N+1) / (1 - |t|)^2.
  Rational tail = Rational(2 * static_cast<unsigned long>(order + 2));
  for (std::size_t i = 0; i <= order; ++i) tail *= abs_t;
  tail /= (1 - abs_t) * (1 - abs_t);

  const Real abs_closed = boost::multiprecision::abs(closed);
  const Real rel_bound = to_real(tail) / abs_closed;
  if (rel_bound >= Real(tol) / 2) {
    throw Error(Errc::kPrecisionInsufficient, "truncation bound " + rel_bound.str(6) + " not below tol/2");
  }
  const Real rel_err = boost::multiprecision::abs(closed - to_real(partial)) / abs_closed;

  SpotCheck out;
  out.closed_form = closed.convert_to<double>();
  out.partial_sum = to_real(partial).convert_to<double>();
  out.relative_error = rel_err.convert_to<double>();
  out.remainder_bound = rel_bound.convert_to<double>();
  out.pass = rel_err <= Real(tol);
  return out;
}

}  // namespace peakpoly
