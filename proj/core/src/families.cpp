#include "peakpoly/families.hpp"

#include <string>

#include "peakpoly/error.hpp"

namespace peakpoly {
namespace {

using Series = std::vector<Rational>;  // truncated univariate power series

Series mul(const Series& a, const Series& b) {
  Series out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1/a for a series with nonzero constant term.
Series inverse(const Series& a) {
  Series inv(a.size(), Rational(0));
  inv[0] = Rational(1) / a[0];
  for (std::size_t m = 1; m < a.size(); ++m) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc += a[i] * inv[m - i];
    inv[m] = -acc / a[0];
  }
  return inv;
}

struct TanSec {
  Series tan;
  Series sec;
};

TanSec tan_sec_series(int nmax) {
  const auto len = static_cast<std::size_t>(nmax + 1);
  Series cos_s(len, Rational(0));
  Series sin_s(len, Rational(0));
  for (std::size_t m = 0; m < len; ++m) {
    const Rational term(Integer(1), factorial(static_cast<unsigned>(m)));
    const bool negative = (m / 2) % 2 == 1;
    if (m % 2 == 0) cos_s[m] = negative ? -term : term;
    else sin_s[m] = negative ? -term : term;
  }
  Series sec = inverse(cos_s);
  Series tan = mul(sin_s, sec);
  return {std::move(tan), std::move(sec)};
}

Integer egf_coefficient(const Series& s, std::size_t n) {
  const Rational v = s[n] * Rational(factorial(static_cast<unsigned>(n)));
  if (!is_integer(v)) throw Error(Errc::kStructureViolation, "non-integer EGF coefficient " + v.get_str());
  return v.get_num();
}

Poly one_plus_x() { return Poly{1, 1}; }

}  // namespace

std::string_view to_string(TriangleFamily family) {
  switch (family) {
    case TriangleFamily::kR: return "R";
    case TriangleFamily::kW: return "W";
    case TriangleFamily::kWl: return "WL";
  }
  return "?";
}

CoeffTriangle r_triangle(int nmax) {
  if (nmax < 0) throw Error(Errc::kInvalidArgument, "nmax must be >= 0");
  CoeffTriangle t{TriangleFamily::kR, 0, {}};
  t.rows.push_back({Integer(1)});
  if (nmax >= 1) t.rows.push_back({Integer(1), Integer(1)});
  for (int n = 1; n < nmax; ++n) {
    const auto& prev = t.rows.back();
    std::vector<Integer> next(static_cast<std::size_t>(n + 2));
    for (int k = 0; k <= n + 1; ++k) {
      Integer v = 0;
      if (k <= n) v += (k + 1) * prev[static_cast<std::size_t>(k)];
      if (k >= 2) v += (n - k + 2) * prev[static_cast<std::size_t>(k - 2)];
      next[static_cast<std::size_t>(k)] = v;
    }
    t.rows.push_back(std::move(next));
  }
  return t;
}

std::pair<CoeffTriangle, CoeffTriangle> w_triangles(int nmax) {
  if (nmax < 1) throw Error(Errc::kInvalidArgument, "nmax must be >= 1");
  CoeffTriangle w{TriangleFamily::kW, 1, {{Integer(1)}}};
  CoeffTriangle wl{TriangleFamily::kWl, 1, {{Integer(1)}}};
  for (int n = 2; n <= nmax; ++n) {
    const auto& wp = w.rows.back();
    const auto& lp = wl.rows.back();
    std::vector<Integer> wn(static_cast<std::size_t>((n - 1) / 2 + 1));
    std::vector<Integer> ln(static_cast<std::size_t>(n / 2 + 1));
    for (int k = 0; k < static_cast<int>(wn.size()); ++k) {
      Integer v = 0;
      if (k < static_cast<int>(wp.size())) v += (2 * k + 2) * wp[static_cast<std::size_t>(k)];
      if (k >= 1) v += (n - 2 * k) * wp[static_cast<std::size_t>(k - 1)];
      wn[static_cast<std::size_t>(k)] = v;
    }
    for (int k = 0; k < static_cast<int>(ln.size()); ++k) {
      Integer v = 0;
      if (k < static_cast<int>(lp.size())) v += (2 * k + 1) * lp[static_cast<std::size_t>(k)];
      if (k >= 1) v += (n - 2 * k + 1) * lp[static_cast<std::size_t>(k - 1)];
      ln[static_cast<std::size_t>(k)] = v;
    }
    w.rows.push_back(std::move(wn));
    wl.rows.push_back(std::move(ln));
  }
  return {std::move(w), std::move(wl)};
}

std::vector<Poly> r_polys(int nmax) {
  if (nmax < 0) throw Error(Errc::kInvalidArgument, "nmax must be >= 0");
  std::vector<Poly> out{Poly{1}};
  if (nmax >= 1) out.push_back(Poly{1, 1});
  const Poly x_one_minus_x2{0, 1, 0, -1};
  for (int n = 1; n < nmax; ++n) {
    const Poly& r = out.back();
    out.push_back(Poly{1, 0, n} * r + x_one_minus_x2 * derivative(r));
  }
  return out;
}

Poly r_poly(int n) { return r_polys(n).back(); }

std::vector<Poly> w_polys(int nmax) {
  std::vector<Poly> out{Poly{}, Poly{1}};
  const Poly two_x_one_minus_x{0, 2, -2};
  for (int n = 1; n < nmax; ++n) {
    const Poly& w = out.back();
    out.push_back(Poly{2, n - 1} * w + two_x_one_minus_x * derivative(w));
  }
  out.resize(static_cast<std::size_t>(nmax + 1));
  return out;
}

std::vector<Poly> wl_polys(int nmax) {
  std::vector<Poly> out{Poly{}, Poly{1}};
  const Poly two_x_one_minus_x{0, 2, -2};
  for (int n = 1; n < nmax; ++n) {
    const Poly& w = out.back();
    out.push_back(Poly{1, n} * w + two_x_one_minus_x * derivative(w));
  }
  out.resize(static_cast<std::size_t>(nmax + 1));
  return out;
}

Poly interleave(std::span<const Integer> w_row, std::span<const Integer> wl_row) {
  std::vector<Rational> c(std::max(2 * w_row.size() + 1, 2 * wl_row.size()), Rational(0));
  for (std::size_t k = 0; k < w_row.size(); ++k) c[2 * k + 1] = w_row[k];
  for (std::size_t k = 0; k < wl_row.size(); ++k) c[2 * k] = wl_row[k];
  return Poly(std::move(c));
}

DerivativePolys derivative_polys(int nmax) {
  if (nmax < 0) throw Error(Errc::kInvalidArgument, "nmax must be >= 0");
  const Poly one_plus_u2{1, 0, 1};
  const Poly u = Poly::x();
  DerivativePolys d{{u}, {Poly{1}}};
  for (int n = 0; n < nmax; ++n) {
    d.p.push_back(one_plus_u2 * derivative(d.p.back()));
    d.q.push_back(one_plus_u2 * derivative(d.q.back()) + u * d.q.back());
  }
  return d;
}

std::vector<Poly> eulerian_polys(int nmax) {
  if (nmax < 0) throw Error(Errc::kInvalidArgument, "nmax must be >= 0");
  std::vector<Poly> out{Poly{1}};
  const Poly x_one_minus_x{0, 1, -1};
  for (int n = 0; n < nmax; ++n) {
    const Poly& a = out.back();
    out.push_back(Poly{1, n} * a + x_one_minus_x * derivative(a));
  }
  return out;
}

Poly eulerian(int n) { return eulerian_polys(n).back(); }

SignedEulerian signed_eulerian(int n, const OracleConfig& config) {
  const auto c = signed_distribution(n, Stat::kDesB, config);
  const auto ct = signed_distribution(n, Stat::kAdes, config);
  return {Poly::from_integers(c.counts), Poly::from_integers(ct.counts)};
}

Poly t_poly_from(const SignedEulerian& s) {
  if (s.c_tilde.coeff(0) != 0) {
    throw Error(Errc::kConstantTermNonzero, "C~_n(0) = " + s.c_tilde.coeff(0).get_str());
  }
  Poly shifted;
  for (std::size_t k = 1; k < s.c_tilde.size(); ++k) {
    shifted += Poly::monomial(s.c_tilde.coeffs()[k], 2 * k - 1);
  }
  return stretch(s.c, 2) + shifted;
}

Poly t_poly(int n, const OracleConfig& config) { return t_poly_from(signed_eulerian(n, config)); }

Poly quadratic_cleared(const Poly& p, unsigned total_power) {
  const unsigned half = total_power / 2;
  const Poly base = subst_cleared(p, Poly{0, 4}, pow(one_plus_x(), 2), half);
  return total_power % 2 == 0 ? base : base * one_plus_x();
}

SignedEulerian signed_eulerian_from_peaks(int n, const Poly& w, const Poly& wl) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  return {quadratic_cleared(wl, static_cast<unsigned>(n)),
          Poly{0, 2} * quadratic_cleared(w, static_cast<unsigned>(n - 1))};
}

Poly p_from_peaks(int n, const Poly& w) {
  const Poly one_plus_y2{1, 0, 1};
  Poly acc;
  for (std::size_t k = 0; k < w.size(); ++k) {
    acc += w.coeffs()[k] * (Poly::monomial(1, static_cast<std::size_t>(n) - 2 * k - 1) *
                            pow(one_plus_y2, static_cast<unsigned>(k + 1)));
  }
  return acc;
}

Poly q_from_peaks(int n, const Poly& wl) {
  const Poly one_plus_y2{1, 0, 1};
  Poly acc;
  for (std::size_t k = 0; k < wl.size(); ++k) {
    acc += wl.coeffs()[k] *
           (Poly::monomial(1, static_cast<std::size_t>(n) - 2 * k) * pow(one_plus_y2, static_cast<unsigned>(k)));
  }
  return acc;
}

std::vector<Integer> euler_numbers(int nmax) {
  if (nmax < 0) throw Error(Errc::kInvalidArgument, "nmax must be >= 0");
  const TanSec ts = tan_sec_series(nmax);
  std::vector<Integer> e;
  e.reserve(static_cast<std::size_t>(nmax + 1));
  for (std::size_t n = 0; n <= static_cast<std::size_t>(nmax); ++n) {
    e.push_back(egf_coefficient(ts.tan, n) + egf_coefficient(ts.sec, n));
  }
  return e;
}

OrderTables tangent_secant_orders(int nmax, int kmax) {
  if (nmax < 0 || kmax < 0 || kmax > nmax) throw Error(Errc::kInvalidArgument, "need 0 <= kmax <= nmax");
  const TanSec ts = tan_sec_series(nmax);
  const auto rows = static_cast<std::size_t>(nmax + 1);
  const auto cols = static_cast<std::size_t>(kmax + 1);
  OrderTables t{std::vector<std::vector<Integer>>(rows, std::vector<Integer>(cols)),
                std::vector<std::vector<Integer>>(rows, std::vector<Integer>(cols))};
  Series tan_pow(rows, Rational(0));
  tan_pow[0] = 1;
  for (std::size_t k = 0; k < cols; ++k) {
    const Series sec_tan = mul(ts.sec, tan_pow);
    for (std::size_t n = 0; n < rows; ++n) {
      t.tangent[n][k] = egf_coefficient(tan_pow, n);
      t.secant[n][k] = egf_coefficient(sec_tan, n);
    }
    tan_pow = mul(tan_pow, ts.tan);
  }
  return t;
}

DerivativePolys cvijovic_reconstruct(int n) {
  if (n < 0) throw Error(Errc::kInvalidArgument, "n must be >= 0");
  const OrderTables t = tangent_secant_orders(n + 1, n + 1);
  DerivativePolys out;
  for (int m = 0; m <= n; ++m) {
    const auto mu = static_cast<std::size_t>(m);
    Poly p = Poly::constant(t.tangent[mu][1]);
    for (std::size_t k = 1; k <= mu + 1; ++k) {
      p += Poly::monomial(make_rational(t.tangent[mu + 1][k], Integer(static_cast<unsigned long>(k))), k);
    }
    Poly q;
    for (std::size_t k = 0; k <= mu; ++k) q += Poly::monomial(t.secant[mu][k], k);
    out.p.push_back(std::move(p));
    out.q.push_back(std::move(q));
  }
  return out;
}

Poly bell_partial(int n, int k, std::span<const Poly> xs) {
  if (n < 0 || k < 0 || k > n) throw Error(Errc::kInvalidArgument, "need 0 <= k <= n");
  if (k >= 1 && static_cast<int>(xs.size()) < n - k + 1) {
    throw Error(Errc::kInsufficientArguments,
                "B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " + std::to_string(n - k + 1) +
                    " arguments, got " + std::to_string(xs.size()));
  }
  // table[m][j] = B_{m,j}, built by B_{m,j} = sum_i C(m-1, i-1) x_i B_{m-i,j-1}.
  const auto rows = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<Poly>> table(rows, std::vector<Poly>(static_cast<std::size_t>(k + 1)));
  table[0][0] = Poly{1};
  for (int j = 1; j <= k; ++j) {
    for (int m = j; m <= n; ++m) {
      Poly acc;
      for (int i = 1; i <= m - j + 1; ++i) {
        const Poly& prev = table[static_cast<std::size_t>(m - i)][static_cast<std::size_t>(j - 1)];
        if (prev.is_zero()) continue;
        acc += Rational(binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(i - 1))) *
               (xs[static_cast<std::size_t>(i - 1)] * prev);
      }
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = std::move(acc);
    }
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling2(int n, int k) {
  const std::vector<Poly> ones(static_cast<std::size_t>(std::max(n, 1)), Poly{1});
  return bell_partial(n, k, ones).coeff(0).get_num();
}

std::vector<Poly> bell_peak_arguments(int count) {
  std::vector<Poly> xs;
  xs.reserve(static_cast<std::size_t>(count));
  const Poly one_minus_x2{1, 0, -1};
  for (int i = 1; i <= count; ++i) xs.push_back(pow(one_minus_x2, static_cast<unsigned>((i - 1) / 2)));
  return xs;
}

Poly bell_formula_r(int n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  const std::vector<Poly> xs = bell_peak_arguments(n);
  Poly acc;
  for (int k = 1; k <= n; ++k) {
    Rational scale(factorial(static_cast<unsigned>(k)));
    if ((n - k) % 2 != 0) scale = -scale;
    acc += scale * (pow(one_plus_x(), static_cast<unsigned>(k + 1)) * bell_partial(n, k, xs));
  }
  return acc;
}

bool x0_reduction_check(int n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  Integer acc = 0;
  for (int k = 0; k <= n; ++k) {
    Integer term = factorial(static_cast<unsigned>(k)) * stirling2(n, k);
    if ((n - k) % 2 != 0) term = -term;
    acc += term;
  }
  return acc == 1;
}

bool x1_reduction_check(int n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  std::vector<Poly> xs(static_cast<std::size_t>(n));
  xs[0] = Poly{1};
  if (n >= 2) xs[1] = Poly{1};
  Integer acc = 0;
  for (int k = 1; k <= n; ++k) {
    Integer term = factorial(static_cast<unsigned>(k)) * pow2(static_cast<unsigned>(k)) *
                   bell_partial(n, k, xs).coeff(0).get_num();
    if ((n - k) % 2 != 0) term = -term;
    acc += term;
  }
  return acc == factorial(static_cast<unsigned>(n + 1));
}

Poly g_poly(int n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be >= 1");
  const Poly g = exact_div(r_poly(n), pow(one_plus_x(), static_cast<unsigned>(n / 2 + 1)));
  for (const auto& c : g.coeffs()) {
    if (!is_integer(c) || c <= 0) {
      throw Error(Errc::kNonpositiveCoefficient, "G_" + std::to_string(n) + " has coefficient " + c.get_str());
    }
  }
  return g;
}

}  // namespace peakpoly
