#include "peakpoly/identities.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <string>
#include <thread>

#include "peakpoly/error.hpp"
#include "peakpoly/roots.hpp"
#include "peakpoly/series.hpp"

namespace peakpoly {
namespace {

std::optional<Witness> diff(int n, const Poly& lhs, const Poly& rhs) {
  if (lhs == rhs) return std::nullopt;
  const std::size_t len = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) return Witness{n, i, to_string(lhs.coeff(i)), to_string(rhs.coeff(i)), {}};
  }
  return std::nullopt;
}

std::optional<Witness> diff(int n, std::span<const Integer> lhs, std::span<const Integer> rhs) {
  const std::size_t len = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Integer a = i < lhs.size() ? lhs[i] : Integer(0);
    const Integer b = i < rhs.size() ? rhs[i] : Integer(0);
    if (a != b) return Witness{n, i, to_string(a), to_string(b), {}};
  }
  return std::nullopt;
}

std::optional<Witness> diff_value(int n, std::size_t index, const Integer& lhs, const Integer& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Witness{n, index, to_string(lhs), to_string(rhs), {}};
}

std::optional<Witness> first_of(std::initializer_list<std::function<std::optional<Witness>()>> parts) {
  for (const auto& part : parts) {
    if (auto w = part()) return w;
  }
  return std::nullopt;
}

template <typename PerN>
CheckResult over_range(std::string id, int lo, int hi, PerN per_n) {
  CheckResult result{std::move(id), lo, hi, true, std::nullopt};
  for (int n = lo; n <= hi; ++n) {
    try {
      if (auto w = per_n(n)) {
        result.pass = false;
        result.witness = std::move(w);
        return result;
      }
    } catch (const Error& e) {
      result.pass = false;
      result.witness = Witness{n, 0, {}, {}, e.what()};
      return result;
    }
  }
  return result;
}

CheckResult guarded(std::string id, int lo, int hi, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return CheckResult{std::move(id), lo, hi, false, Witness{lo, 0, {}, {}, e.what()}};
  }
}

CheckResult from_gf_verdict(std::string id, int lo, int hi, const GfVerdict& v) {
  CheckResult r{std::move(id), lo, hi, v.pass, std::nullopt};
  if (!v.pass && v.mismatch) {
    const auto& m = *v.mismatch;
    r.witness = Witness{static_cast<int>(m.z_order), m.x_index, to_string(m.lhs), to_string(m.rhs), {}};
  }
  return r;
}

Poly row_poly(const CoeffTriangle& t, int n) { return Poly::from_integers(t.row(n)); }

Poly petersen_rhs(int n, const std::vector<Poly>& eulerian) {
  const Poly one_minus_x{1, -1};
  Poly rhs = pow(one_minus_x, static_cast<unsigned>(n));
  for (int i = 1; i <= n; ++i) {
    const Rational scale(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * pow2(static_cast<unsigned>(i)));
    rhs += scale * (pow(one_minus_x, static_cast<unsigned>(n - i)) * Poly::x() * eulerian[static_cast<std::size_t>(i)]);
  }
  return rhs;
}

template <typename Fn>
std::vector<std::vector<CheckResult>> run_tasks(const std::vector<Fn>& tasks, unsigned jobs) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  const unsigned workers = std::clamp<unsigned>(jobs, 1U, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
    return slots;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) slots[i] = tasks[i]();
    });
  }
  for (auto& t : pool) t.join();
  return slots;
}

constexpr std::array kBellExample{1L, 16L, 58L, 88L, 61L, 16L};
constexpr std::array kAndre{1L, 1L, 1L, 2L, 5L, 16L};

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kAll: return "all";
    case Suite::kIdentities: return "identities";
    case Suite::kGf: return "gf";
    case Suite::kRoots: return "roots";
    case Suite::kClt: return "clt";
    case Suite::kOracle: return "oracle";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::kAll, Suite::kIdentities, Suite::kGf, Suite::kRoots, Suite::kClt, Suite::kOracle}) {
    if (to_string(s) == name) return s;
  }
  throw Error(Errc::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
}

FamilyData FamilyData::build(int nmax) {
  if (nmax < 1) throw Error(Errc::kInvalidArgument, "family data needs nmax >= 1");
  FamilyData d;
  d.r = r_triangle(nmax);
  std::tie(d.w, d.wl) = w_triangles(nmax);
  d.r_polys = peakpoly::r_polys(nmax);
  d.eulerian = eulerian_polys(nmax);
  d.derivative = derivative_polys(nmax);
  d.euler = euler_numbers(nmax);
  return d;
}

void validate(const SuiteConfig& c, Suite suite) {
  const auto need = [](bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::kInvalidArgument, what);
  };
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kIdentities) {
    need(c.nmax_exact >= 1, "nmax_exact must be >= 1");
    need(c.peak_recurrence_nmax >= 1, "peak recurrence range must be >= 1");
  }
  if (all || suite == Suite::kGf) need(c.gf_order >= 2 && c.gf_order <= 40, "gf order must be in [2, 40]");
  if (all || suite == Suite::kRoots) need(c.roots_nmax >= 2, "roots nmax must be >= 2");
  if (all || suite == Suite::kClt) need(c.clt_nmax >= 4, "clt nmax must be >= 4");
  if (all || suite == Suite::kOracle || suite == Suite::kIdentities) {
    need(c.oracle_perm_n >= 1 && c.oracle_signed_n >= 1, "oracle ranges must be >= 1");
    if (c.oracle_perm_n > c.oracle.perm_limit || c.oracle_signed_n > c.oracle.signed_limit) {
      throw Error(Errc::kLimitExceeded, "oracle range beyond enumeration cap");
    }
  }
}

CheckResult check_triangle_vs_poly(const FamilyData& data, int lo, int hi) {
  return over_range("triangle.recurrence_vs_poly", lo, hi, [&](int n) {
    return diff(n, row_poly(data.r, n), data.r_polys[static_cast<std::size_t>(n)]);
  });
}

CheckResult check_interleave(const FamilyData& data, int lo, int hi) {
  return over_range("triangle.interleave", lo, hi, [&](int n) -> std::optional<Witness> {
    const auto& row = data.r.row(n);
    const auto un = static_cast<std::size_t>(n);
    return first_of({
        [&] { return diff(n, row_poly(data.r, n), interleave(data.w.row(n), data.wl.row(n))); },
        [&] { return diff_value(n, 0, row[0], Integer(1)); },
        [&] { return diff_value(n, 1, row[1], pow2(static_cast<unsigned>(n - 1))); },
        [&] {
          Integer sum = 0;
          for (const auto& v : row) sum += v;
          return diff_value(n, row.size(), sum, 2 * factorial(static_cast<unsigned>(n)));
        },
        [&]() -> std::optional<Witness> {
          if (n < 2) return std::nullopt;
          if (auto w = diff_value(n, un, row[un], data.euler[un])) return w;
          return diff_value(n, un, data.r.row(n - 1)[un - 2], data.euler[un]);
        },
    });
  });
}

CheckResult check_peak_recurrences(const FamilyData& data, int lo, int hi) {
  const auto w = w_polys(hi);
  const auto wl = wl_polys(hi);
  return over_range("peaks.poly_recurrence", lo, hi, [&](int n) {
    const auto un = static_cast<std::size_t>(n);
    return first_of({
        [&] { return diff(n, w[un], row_poly(data.w, n)); },
        [&] { return diff(n, wl[un], row_poly(data.wl, n)); },
        [&]() -> std::optional<Witness> {
          const auto dw = w[un].degree();
          const auto dl = wl[un].degree();
          if (dw == static_cast<std::size_t>((n - 1) / 2) && dl == static_cast<std::size_t>(n / 2) &&
              data.r_polys[un].degree() == un) {
            return std::nullopt;
          }
          return Witness{n, 0, {}, {}, "degree contract violated"};
        },
    });
  });
}

CheckResult check_euler_numbers(const FamilyData& data, int lo, int hi) {
  return over_range("euler.tan_sec", lo, hi, [&](int n) {
    const auto un = static_cast<std::size_t>(n);
    const Poly& dp = n % 2 == 1 ? data.derivative.p[un] : data.derivative.q[un];
    return first_of({
        [&] { return diff_value(n, 0, dp.coeff(0).get_num(), data.euler[un]); },
        [&]() -> std::optional<Witness> {
          if (un >= kAndre.size()) return std::nullopt;
          return diff_value(n, 0, data.euler[un], Integer(kAndre[un]));
        },
    });
  });
}

CheckResult check_cvijovic(const FamilyData& data, int lo, int hi) {
  return guarded("cvijovic", lo, hi, [&] {
    const DerivativePolys rebuilt = cvijovic_reconstruct(hi);
    return over_range("cvijovic", lo, hi, [&](int n) {
      const auto un = static_cast<std::size_t>(n);
      return first_of({
          [&] { return diff(n, rebuilt.p[un], data.derivative.p[un]); },
          [&] { return diff(n, rebuilt.q[un], data.derivative.q[un]); },
      });
    });
  });
}

CheckResult check_derivative_from_peaks(const FamilyData& data, int lo, int hi) {
  return over_range("derivative.from_peaks", lo, hi, [&](int n) {
    const auto un = static_cast<std::size_t>(n);
    return first_of({
        [&] { return diff(n, p_from_peaks(n, row_poly(data.w, n)), data.derivative.p[un]); },
        [&] { return diff(n, q_from_peaks(n, row_poly(data.wl, n)), data.derivative.q[un]); },
    });
  });
}

CheckResult check_stembridge(const FamilyData& data, int lo, int hi) {
  return over_range("stembridge", lo, hi, [&](int n) {
    const Poly lhs = quadratic_cleared(row_poly(data.w, n), static_cast<unsigned>(n - 1));
    return diff(n, lhs, Rational(pow2(static_cast<unsigned>(n - 1))) * data.eulerian[static_cast<std::size_t>(n)]);
  });
}

CheckResult check_petersen(const FamilyData& data, int lo, int hi) {
  return over_range("petersen", lo, hi, [&](int n) {
    const Poly lhs = quadratic_cleared(row_poly(data.wl, n), static_cast<unsigned>(n));
    return diff(n, lhs, petersen_rhs(n, data.eulerian));
  });
}

CheckResult check_dilks_oracle(const FamilyData& data, int lo, int hi, const OracleConfig& oracle) {
  return over_range("dilks.oracle", lo, hi, [&](int n) {
    const SignedEulerian enumerated = signed_eulerian(n, oracle);
    const SignedEulerian peaks = signed_eulerian_from_peaks(n, row_poly(data.w, n), row_poly(data.wl, n));
    return first_of({
        [&] { return diff(n, peaks.c, enumerated.c); },
        [&] { return diff(n, peaks.c_tilde, enumerated.c_tilde); },
    });
  });
}

CheckResult check_dilks_gf(const FamilyData& data, int lo, int hi) {
  return guarded("dilks.gf", lo, hi, [&] {
    const auto from_gf = signed_eulerian_from_gf(hi);
    return over_range("dilks.gf", lo, hi, [&](int n) {
      const auto& gf = from_gf[static_cast<std::size_t>(n)];
      const SignedEulerian peaks = signed_eulerian_from_peaks(n, row_poly(data.w, n), row_poly(data.wl, n));
      return first_of({
          [&] { return diff(n, peaks.c, gf.c); },
          [&] { return diff(n, peaks.c_tilde, gf.c_tilde); },
      });
    });
  });
}

CheckResult check_signed_eulerian_oracle(const FamilyData& data, int lo, int hi, const OracleConfig& oracle) {
  return over_range("type_b.t_poly.oracle", lo, hi, [&](int n) {
    const Poly expected = pow(Poly{1, 1}, static_cast<unsigned>(n + 1)) * data.eulerian[static_cast<std::size_t>(n)];
    return diff(n, t_poly(n, oracle), expected);
  });
}

CheckResult check_bell_and_reductions(const FamilyData& data, int lo, int hi) {
  return over_range("bell", lo, hi, [&](int n) {
    const Poly formula = bell_formula_r(n);
    return first_of({
        [&] { return diff(n, formula, data.r_polys[static_cast<std::size_t>(n + 1)]); },
        [&]() -> std::optional<Witness> {
          if (n != 4) return std::nullopt;
          std::vector<Integer> example(kBellExample.begin(), kBellExample.end());
          return diff(n, formula, Poly::from_integers(example));
        },
        [&]() -> std::optional<Witness> {
          if (x0_reduction_check(n)) return std::nullopt;
          return Witness{n, 0, {}, {}, "x=0 Stirling reduction failed"};
        },
        [&]() -> std::optional<Witness> {
          if (x1_reduction_check(n)) return std::nullopt;
          return Witness{n, 0, {}, {}, "x=1 factorial reduction failed"};
        },
    });
  });
}

CheckResult check_bell_series_definition(int lo, int hi) {
  const std::vector<Poly> xs = bell_peak_arguments(std::max(hi, 1));
  const auto order = static_cast<std::size_t>(hi);
  TruncSeries inner(order);
  for (std::size_t i = 1; i <= order; ++i) inner[i] = xs[i - 1] * Rational(Integer(1), factorial(static_cast<unsigned>(i)));
  // powers[k] = inner^k / k!
  std::vector<TruncSeries> powers{TruncSeries::constant(Poly{1}, order)};
  for (int k = 1; k <= hi; ++k) {
    powers.push_back(Poly::constant(Rational(1, k)) * (powers.back() * inner));
  }
  return over_range("bell.series_definition", lo, hi, [&](int n) -> std::optional<Witness> {
    for (int k = 0; k <= n; ++k) {
      const Poly expected = powers[static_cast<std::size_t>(k)].egf_term(static_cast<std::size_t>(n));
      if (auto w = diff(n, bell_partial(n, k, xs), expected)) {
        w->detail = "k=" + std::to_string(k);
        return w;
      }
    }
    return std::nullopt;
  });
}

CheckResult check_oracle_peaks(const FamilyData& data, int lo, int hi, const OracleConfig& oracle) {
  return over_range("oracle.peaks", lo, hi, [&](int n) {
    const auto pk = distribution(n, Stat::kPk, oracle);
    const auto lpk = distribution(n, Stat::kLpk, oracle);
    return first_of({
        [&] { return diff(n, pk.counts, data.w.row(n)); },
        [&] { return diff(n, lpk.counts, data.wl.row(n)); },
        [&] { return diff(n, row_poly(data.r, n), interleave(pk.counts, lpk.counts)); },
        [&] { return diff(n, data.r_polys[static_cast<std::size_t>(n)], interleave(pk.counts, lpk.counts)); },
    });
  });
}

CheckResult check_oracle_descents(const FamilyData& data, int lo, int hi, const OracleConfig& oracle) {
  return over_range("oracle.descents", lo, hi, [&](int n) {
    return diff(n, Poly::from_integers(distribution(n, Stat::kDes, oracle).counts),
                data.eulerian[static_cast<std::size_t>(n)]);
  });
}

CheckResult check_oracle_alternating(const FamilyData& data, int lo, int hi, const OracleConfig& oracle) {
  return over_range("oracle.alternating", lo, hi, [&](int n) {
    const Integer alt = count_alternating(n, oracle);
    return first_of({
        [&] { return diff_value(n, 0, alt, data.euler[static_cast<std::size_t>(n)]); },
        [&] { return diff_value(n, 1, count_reverse_alternating(n, oracle), alt); },
    });
  });
}

CheckResult check_oracle_signed_totals(int lo, int hi, const OracleConfig& oracle) {
  return over_range("oracle.signed_totals", lo, hi, [&](int n) {
    const auto desb = signed_distribution(n, Stat::kDesB, oracle);
    const auto ades = signed_distribution(n, Stat::kAdes, oracle);
    const Integer total = pow2(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
    Integer s1 = 0;
    Integer s2 = 0;
    for (const auto& v : desb.counts) s1 += v;
    for (const auto& v : ades.counts) s2 += v;
    return first_of({
        [&] { return diff_value(n, 0, s1, total); },
        [&] { return diff_value(n, 1, s2, total); },
        [&] { return diff_value(n, 2, ades.counts.at(0), Integer(0)); },
    });
  });
}

CheckResult check_interleave(int n) { return check_interleave(FamilyData::build(std::max(n, 1)), n, n); }
CheckResult check_derivative_from_peaks(int n) { return check_derivative_from_peaks(FamilyData::build(std::max(n, 1)), n, n); }
CheckResult check_stembridge(int n) { return check_stembridge(FamilyData::build(std::max(n, 1)), n, n); }
CheckResult check_petersen(int n) { return check_petersen(FamilyData::build(std::max(n, 1)), n, n); }

CheckResult check_dilks(int n, const OracleConfig& oracle) {
  return check_dilks_oracle(FamilyData::build(std::max(n, 1)), n, n, oracle);
}

CheckResult check_bell_and_reductions(int nmax) {
  return check_bell_and_reductions(FamilyData::build(nmax + 1), 1, nmax);
}

std::vector<CheckResult> run_suite(Suite suite, const SuiteConfig& c) {
  validate(c, suite);
  const bool all = suite == Suite::kAll;
  const bool identities = all || suite == Suite::kIdentities;
  const bool oracle = all || suite == Suite::kOracle;
  const bool gf = all || suite == Suite::kGf;
  const bool roots = all || suite == Suite::kRoots;
  const bool clt = all || suite == Suite::kClt;

  int need = 1;
  if (identities) need = std::max({need, c.nmax_exact + 1, c.peak_recurrence_nmax, c.oracle_signed_n, c.gf_order});
  if (oracle) need = std::max({need, c.oracle_perm_n, c.oracle_signed_n});
  FamilyData data = FamilyData::build(need);
  if (c.corrupt && c.corrupt->n >= 0 && c.corrupt->n <= data.r.last_row()) {
    auto& row = data.r.row(c.corrupt->n);
    if (c.corrupt->k >= 0 && static_cast<std::size_t>(c.corrupt->k) < row.size()) {
      row[static_cast<std::size_t>(c.corrupt->k)] += c.corrupt->delta;
    }
  }

  using Task = std::function<std::vector<CheckResult>()>;
  std::vector<Task> tasks;
  const auto one = [&tasks](std::function<CheckResult()> f) {
    tasks.emplace_back([f = std::move(f)] { return std::vector<CheckResult>{f()}; });
  };
  const FamilyData& d = data;

  if (oracle) {
    one([&] { return check_oracle_peaks(d, 1, c.oracle_perm_n, c.oracle); });
    one([&] { return check_oracle_descents(d, 1, c.oracle_perm_n, c.oracle); });
    one([&] { return check_oracle_alternating(d, 1, c.oracle_perm_n, c.oracle); });
    one([&] { return check_oracle_signed_totals(1, c.oracle_signed_n, c.oracle); });
  }
  if (identities) {
    one([&] { return check_triangle_vs_poly(d, 0, c.nmax_exact); });
    one([&] { return check_interleave(d, 1, c.nmax_exact); });
    one([&] { return check_peak_recurrences(d, 1, c.peak_recurrence_nmax); });
    one([&] { return check_euler_numbers(d, 0, c.nmax_exact); });
    one([&] { return check_cvijovic(d, 0, c.nmax_exact); });
    one([&] { return check_derivative_from_peaks(d, 1, c.nmax_exact); });
    one([&] { return check_stembridge(d, 1, c.nmax_exact); });
    one([&] { return check_petersen(d, 1, c.nmax_exact); });
    one([&] { return check_dilks_oracle(d, 1, c.oracle_signed_n, c.oracle); });
    if (c.gf_order > c.oracle_signed_n) {
      one([&] { return check_dilks_gf(d, c.oracle_signed_n + 1, c.gf_order); });
    }
    one([&] { return check_signed_eulerian_oracle(d, 1, c.oracle_signed_n, c.oracle); });
    one([&] { return check_bell_and_reductions(d, 1, c.nmax_exact); });
    one([&] { return check_bell_series_definition(0, std::min(8, c.nmax_exact)); });
  }
  if (gf) {
    const auto order = static_cast<std::size_t>(c.gf_order);
    for (GfFamily f : all_gf_families()) {
      one([f, order, &c] {
        const std::string id = "gf." + std::string(to_string(f));
        return guarded(id, 0, c.gf_order, [&] { return from_gf_verdict(id, 0, c.gf_order, verify_gf(f, order)); });
      });
    }
    one([order, &c] {
      return guarded("gf.txz_axz", 0, c.gf_order,
                     [&] { return from_gf_verdict("gf.txz_axz", 0, c.gf_order, verify_txz_axz(order)); });
    });
    one([order, &c] {
      return guarded("gf.pde", 0, c.gf_order - 1,
                     [&] { return from_gf_verdict("gf.pde", 0, c.gf_order - 1, verify_pde(order)); });
    });
    struct Spot {
      const char* id;
      long xn, xd, tn, td;
      std::size_t order;
    };
    for (const Spot& s : {Spot{"gf.numeric.x=1/2,t=1/20", 1, 2, 1, 20, 20},
                          Spot{"gf.numeric.x=7/10,t=1/10", 7, 10, 1, 10, 24}}) {
      one([s] {
        const int hi = static_cast<int>(s.order);
        return guarded(s.id, 0, hi, [&] {
          const SpotCheck r = numeric_gf_spotcheck(make_rational(s.xn, s.xd), make_rational(s.tn, s.td), s.order, 1e-12);
          CheckResult out{s.id, 0, hi, r.pass, std::nullopt};
          if (!r.pass) {
            out.witness = Witness{hi, 0, std::to_string(r.partial_sum), std::to_string(r.closed_form),
                                  "relative error " + std::to_string(r.relative_error)};
          }
          return out;
        });
      });
    }
  }
  if (roots) {
    one([&] {
      return over_range("roots.structure", 1, c.roots_nmax, [](int n) -> std::optional<Witness> {
        verify_root_structure(n);
        return std::nullopt;
      });
    });
    one([&] {
      return over_range("roots.interlacing", 1, c.roots_nmax, [](int n) -> std::optional<Witness> {
        verify_interlacing(n);
        return std::nullopt;
      });
    });
    one([&] {
      return over_range("roots.mode", 2, c.roots_nmax, [](int n) -> std::optional<Witness> {
        const ModeReport m = mode_check(n);
        if (m.in_bracket) return std::nullopt;
        return Witness{n, static_cast<std::size_t>(m.argmax), std::to_string(m.argmax),
                       std::to_string(m.bracket_lo) + ".." + std::to_string(m.bracket_hi), "mode outside bracket"};
      });
    });
  }
  if (clt) {
    for (int n = 4; n <= c.clt_nmax; ++n) {
      one([n] {
        return over_range("clt", n, n, [](int m) {
          const CltStats s = clt_stats(m);
          const Rational mu = make_rational(2 * m - 1, 3);
          const Rational sigma2 = make_rational(8 * m + 8, 45);
          if (s.mu != mu) return std::optional<Witness>(Witness{m, 0, to_string(s.mu), to_string(mu), "mu"});
          if (s.sigma2 != sigma2) {
            return std::optional<Witness>(Witness{m, 1, to_string(s.sigma2), to_string(sigma2), "sigma2"});
          }
          return std::optional<Witness>{};
        });
      });
    }
  }

  std::vector<CheckResult> results;
  for (auto& slot : run_tasks(tasks, c.jobs)) {
    for (auto& r : slot) results.push_back(std::move(r));
  }
  return results;
}

std::vector<CheckResult> run_all(int nmax_exact, int nmax_oracle_perm, int nmax_oracle_signed, int gf_order) {
  SuiteConfig c;
  c.nmax_exact = nmax_exact;
  c.oracle_perm_n = nmax_oracle_perm;
  c.oracle_signed_n = nmax_oracle_signed;
  c.gf_order = gf_order;
  return run_suite(Suite::kAll, c);
}

bool aggregate_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace peakpoly
