// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "peakpoly/families.hpp"
#include "peakpoly/identities.hpp"
#include "peakpoly/perm_oracle.hpp"
#include "peakpoly/roots.hpp"
#include "peakpoly/series.hpp"

using namespace peakpoly;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string run_cli(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "peakpoly");
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

Verdict triangle_fidelity() {
  Verdict v;
  const std::string expected =
      "1\n"
      "1,1\n"
      "1,2,1\n"
      "1,4,5,2\n"
      "1,8,18,16,5\n"
      "1,16,58,88,61,16\n"
      "1,32,179,416,479,272,61\n";
  int code = -1;
  const std::string got = run_cli({"triangle", "--family", "R", "--nmax", "6", "--format", "csv"}, &code);
  v.require(code == 0, "non-zero exit");
  v.require(got == expected, "output differs:\n" + got);
  return v;
}

Verdict triple_agreement() {
  Verdict v;
  const CoeffTriangle tri = r_triangle(9);
  for (int n = 1; n <= 9; ++n) {
    const Poly from_triangle = Poly::from_integers(tri.row(n));
    const Poly from_recurrence = r_poly(n);
    const StatDistribution pk = distribution(n, Stat::kPk);
    const StatDistribution lpk = distribution(n, Stat::kLpk);
    const Poly from_oracle = interleave(pk.counts, lpk.counts);
    const std::string at = "n=" + std::to_string(n);
    v.require(from_triangle == from_recurrence, "triangle vs r_poly at " + at);
    v.require(from_recurrence == from_oracle, "r_poly vs enumeration at " + at);
  }
  for (int n = 1; n <= 7; ++n) {
    const CheckResult r = check_dilks(n);
    v.require(r.pass, "Dilks-Petersen identities at n=" + std::to_string(n));
  }
  return v;
}

Verdict derivative_cross_check() {
  Verdict v;
  const DerivativePolys direct = derivative_polys(12);
  const DerivativePolys rebuilt = cvijovic_reconstruct(12);
  v.require(direct.p == rebuilt.p, "P_n reconstruction");
  v.require(direct.q == rebuilt.q, "Q_n reconstruction");
  for (int n = 0; n <= 10; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Rational at_zero = n % 2 ? direct.p[i](0) : direct.q[i](0);
    const Integer alternating = n == 0 ? Integer(1) : count_alternating(n);
    v.require(at_zero == alternating, "E_n vs alternating count at n=" + std::to_string(n));
  }
  const std::vector<long> andre{1, 1, 1, 2, 5, 16};
  for (int n = 0; n <= 5; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Rational at_zero = n % 2 ? direct.p[i](0) : direct.q[i](0);
    v.require(at_zero == andre[i], "Andre series value at n=" + std::to_string(n));
  }
  return v;
}

Verdict gf_suite() {
  Verdict v;
  for (GfFamily f : all_gf_families()) {
    v.require(verify_gf(f, 16).pass, "generating function " + std::string(to_string(f)));
  }
  // The PDE loses one z-order to d/dz; order 16 input checks z^0..z^15.
  v.require(verify_pde(16).pass, "PDE");
  for (int n = 1; n <= 7; ++n) {
    const Poly lhs = t_poly(n);
    const Poly rhs = pow(Poly{1, 1}, static_cast<unsigned>(n + 1)) * oracle::eulerian_closed(n);
    v.require(lhs == rhs, "T_n from enumeration at n=" + std::to_string(n));
  }
  v.require(verify_txz_axz(16).pass, "T(x,z) vs A(x,z) series");
  return v;
}

Verdict bell_formula() {
  Verdict v;
  for (int n = 1; n <= 12; ++n) {
    v.require(bell_formula_r(n) == r_poly(n + 1), "bell_formula_r at n=" + std::to_string(n));
    v.require(x0_reduction_check(n), "x=0 reduction at n=" + std::to_string(n));
    v.require(x1_reduction_check(n), "x=1 reduction at n=" + std::to_string(n));
  }
  const std::vector<Poly> xs = bell_peak_arguments(4);
  v.require(bell_partial(4, 1, xs) == Poly{1, 0, -1}, "B_{4,1}");
  v.require(bell_partial(4, 2, xs) == Poly{7, 0, -4}, "B_{4,2}");
  v.require(bell_partial(4, 3, xs) == Poly{6}, "B_{4,3}");
  v.require(bell_partial(4, 4, xs) == Poly{1}, "B_{4,4}");
  v.require(to_csv(bell_formula_r(4)) == "1,16,58,88,61,16", "worked example at n=4");
  return v;
}

Verdict root_certification() {
  Verdict v;
  for (int n = 1; n <= 25; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    try {
      const RootReport r = verify_root_structure(n, kDefaultMaxBisections);
      v.require(r.mult_minus1 == n / 2 + 1, "multiplicity of -1" + at);
      v.require(static_cast<int>(r.isolating_intervals.size()) == (n + 1) / 2 - 1, "zero count of G_n" + at);
      v.require(r.all_in_range, "zeros of G_n outside (-1,0)" + at);
      bool positive = r.g.has_integer_coeffs();
      for (const auto& c : r.g.coeffs()) positive = positive && c > 0;
      v.require(positive, "coefficients of G_n" + at);
      verify_interlacing(n, kDefaultMaxBisections);
    } catch (const std::exception& e) {
      v.require(false, e.what() + at);
    }
  }
  return v;
}

Verdict clt_statistics() {
  Verdict v;
  for (int n = 4; n <= 30; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    try {
      const CltStats s = clt_stats(n);
      const Integer f = factorial(static_cast<unsigned>(n));
      v.require(s.mu == make_rational(2 * n - 1, 3), "mean" + at);
      v.require(s.sigma2 == make_rational(8 * n + 8, 45), "variance" + at);
      v.require(s.value_at_one == 2 * f, "R_n(1)" + at);
      v.require(3 * s.first_derivative_at_one == (4 * n - 2) * f, "R_n'(1)" + at);
      v.require(45 * s.second_derivative_at_one == (40 * n * n - 84 * n + 56) * f, "R_n''(1)" + at);
    } catch (const std::exception& e) {
      v.require(false, e.what() + at);
    }
  }
  return v;
}

Verdict mode_bracket() {
  Verdict v;
  for (int n = 2; n <= 25; ++n) {
    const ModeReport m = mode_check(n);
    v.require(m.in_bracket, "mode outside bracket at n=" + std::to_string(n));
  }
  v.require(mode_check(2).max_value == 2, "row 2 maximum");
  v.require(mode_check(5).max_value == 88, "row 5 maximum");
  v.require(mode_check(6).max_value == 479, "row 6 maximum");
  return v;
}

Verdict numeric_spot_check() {
  Verdict v;
  const SpotCheck a = numeric_gf_spotcheck(make_rational(1, 2), make_rational(1, 20), 20, 1e-12);
  const SpotCheck b = numeric_gf_spotcheck(make_rational(7, 10), make_rational(1, 10), 24, 1e-12);
  std::ostringstream d;
  d << "rel errors " << a.relative_error << ", " << b.relative_error << "; tail bounds " << a.remainder_bound << ", "
    << b.remainder_bound;
  v.require(a.pass && a.relative_error <= 1e-12, "(1/2, 1/20): " + d.str());
  v.require(b.pass && b.relative_error <= 1e-12, "(7/10, 1/10): " + d.str());
  if (v.pass) v.detail = d.str();
  return v;
}

Verdict determinism() {
  Verdict v;
  int c1 = -1, c2 = -1, c3 = -1, c4 = -1;
  const std::string first = run_cli({"verify", "--suite", "all"}, &c1);
  const std::string second = run_cli({"verify", "--suite", "all"}, &c2);
  const std::string serial = run_cli({"verify", "--suite", "all", "--jobs", "1"}, &c3);
  const std::string parallel = run_cli({"verify", "--suite", "all", "--jobs", "8"}, &c4);
  v.require(c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0, "verify --suite all did not pass");
  v.require(first == second, "repeated runs differ");
  v.require(serial == parallel, "--jobs 1 and --jobs 8 differ");
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no time limit
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "triangle fidelity", 1.0, triangle_fidelity},
      {2, "triple agreement", 120.0, triple_agreement},
      {3, "derivative polynomial cross-check", 0, derivative_cross_check},
      {4, "generating function suite", 30.0, gf_suite},
      {5, "Bell formula", 0, bell_formula},
      {6, "root certification", 60.0, root_certification},
      {7, "mean and variance formulas", 0, clt_statistics},
      {8, "mode bracket", 0, mode_bracket},
      {9, "numeric spot check", 1.0, numeric_spot_check},
      {10, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      v.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    failures += !v.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << seconds << " s)";
    if (!v.detail.empty()) line << ": " << v.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
