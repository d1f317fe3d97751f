#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peakpoly/families.hpp"
#include "peakpoly/perm_oracle.hpp"
#include "peakpoly/poly.hpp"

namespace peakpoly {

// Where two sides of a check first disagree: smallest n, then smallest
// coefficient index. lhs/rhs hold exact decimal values; detail carries the
// error message when a check aborted instead of comparing.
struct Witness {
  int n = 0;
  std::size_t index = 0;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct CheckResult {
  std::string check_id;
  int n_lo = 0;
  int n_hi = 0;
  bool pass = true;
  std::optional<Witness> witness;  // present iff !pass
};

enum class Suite { kAll, kIdentities, kGf, kRoots, kClt, kOracle };

std::string_view to_string(Suite suite);
// Throws Errc::kInvalidArgument for unknown names.
Suite parse_suite(std::string_view name);

// Test hook: add delta to R_{n,k} before any check reads the triangle.
struct Corruption {
  int n = 0;
  int k = 0;
  long delta = 1;
};

struct SuiteConfig {
  int nmax_exact = 12;       // recurrence-vs-recurrence identities
  int oracle_perm_n = 9;     // S_n enumeration range
  int oracle_signed_n = 7;   // signed permutation enumeration range
  int gf_order = 16;         // z-order for the generating function checks
  int roots_nmax = 25;       // root structure, interlacing, mode
  int clt_nmax = 30;         // mean/variance closed forms, n = 4..clt_nmax
  int peak_recurrence_nmax = 25;
  OracleConfig oracle{10, 7, 1};
  unsigned jobs = 1;         // concurrent checks; never changes the report
  std::optional<Corruption> corrupt;
};

// Throws Errc::kInvalidArgument or Errc::kLimitExceeded when a range is
// empty or past the oracle caps.
void validate(const SuiteConfig& config, Suite suite);

/// Shared exact data every check reads. Built once per run.
struct FamilyData {
  CoeffTriangle r;
  CoeffTriangle w;
  CoeffTriangle wl;
  std::vector<Poly> r_polys;
  std::vector<Poly> eulerian;
  DerivativePolys derivative;
  std::vector<Integer> euler;

  static FamilyData build(int nmax);
  int nmax() const { return r.last_row(); }
};

// Single identity checks over n = lo..hi.
CheckResult check_triangle_vs_poly(const FamilyData& data, int lo, int hi);
CheckResult check_interleave(const FamilyData& data, int lo, int hi);
CheckResult check_peak_recurrences(const FamilyData& data, int lo, int hi);
CheckResult check_euler_numbers(const FamilyData& data, int lo, int hi);
CheckResult check_cvijovic(const FamilyData& data, int lo, int hi);
CheckResult check_derivative_from_peaks(const FamilyData& data, int lo, int hi);
CheckResult check_stembridge(const FamilyData& data, int lo, int hi);
CheckResult check_petersen(const FamilyData& data, int lo, int hi);
CheckResult check_dilks_oracle(const FamilyData& data, int lo, int hi, const OracleConfig& oracle);
CheckResult check_dilks_gf(const FamilyData& data, int lo, int hi);
CheckResult check_signed_eulerian_oracle(const FamilyData& data, int lo, int hi, const OracleConfig& oracle);
CheckResult check_bell_and_reductions(const FamilyData& data, int lo, int hi);
CheckResult check_bell_series_definition(int lo, int hi);

CheckResult check_oracle_peaks(const FamilyData& data, int lo, int hi, const OracleConfig& oracle);
CheckResult check_oracle_descents(const FamilyData& data, int lo, int hi, const OracleConfig& oracle);
CheckResult check_oracle_alternating(const FamilyData& data, int lo, int hi, const OracleConfig& oracle);
CheckResult check_oracle_signed_totals(int lo, int hi, const OracleConfig& oracle);

// Convenience single-n forms building their own data.
CheckResult check_interleave(int n);
CheckResult check_derivative_from_peaks(int n);
CheckResult check_stembridge(int n);
CheckResult check_petersen(int n);
CheckResult check_dilks(int n, const OracleConfig& oracle = {});
CheckResult check_bell_and_reductions(int nmax);

// Every check of the selected suite, in a fixed order. Checks run on up to
// config.jobs threads; the result vector is identical for any job count.
std::vector<CheckResult> run_suite(Suite suite, const SuiteConfig& config);

// run_suite(Suite::kAll) with the given limits.
std::vector<CheckResult> run_all(int nmax_exact, int nmax_oracle_perm, int nmax_oracle_signed, int gf_order);

bool aggregate_pass(const std::vector<CheckResult>& results);

}  // namespace peakpoly
