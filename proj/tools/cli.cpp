#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string_view>
#include <thread>

#include <CLI11.hpp>

#include "peakpoly/error.hpp"
#include "peakpoly/families.hpp"
#include "peakpoly/identities.hpp"
#include "peakpoly/perm_oracle.hpp"
#include "peakpoly/report.hpp"
#include "peakpoly/series.hpp"

namespace peakpoly::cli {
namespace {

constexpr int kTriangleCap = 200;
constexpr int kPolyCap = 60;

unsigned default_jobs() {
  if (const char* env = std::getenv("PEAKPOLY_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<std::string> decimal(std::span<const Integer> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> decimal(const Poly& p) {
  if (p.is_zero()) return {"0"};
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::string csv(const std::vector<std::string>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += values[i];
  }
  return line;
}

void emit_rows(const std::vector<std::vector<std::string>>& rows, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (const auto& row : rows) out << csv(row) << '\n';
    return;
  }
  out << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out << ',';
    out << to_json_array(rows[i]);
  }
  out << "]\n";
}

struct TriangleArgs {
  std::string family = "R";
  int nmax = 0;
  std::string format = "json";
};

int cmd_triangle(const TriangleArgs& a, std::ostream& out, std::ostream& err) {
  const int first = a.family == "R" ? 0 : 1;
  if (a.nmax < first) {
    err << "triangle: --nmax must be >= " << first << " for family " << a.family << '\n';
    return kUsage;
  }
  if (a.nmax > kTriangleCap) {
    err << "triangle: --nmax " << a.nmax << " exceeds cap " << kTriangleCap << '\n';
    return kLimitExceeded;
  }
  std::vector<std::vector<std::string>> rows;
  if (a.family == "R") {
    for (const auto& row : r_triangle(a.nmax).rows) rows.push_back(decimal(row));
  } else {
    const auto [w, wl] = w_triangles(a.nmax);
    for (const auto& row : (a.family == "W" ? w : wl).rows) rows.push_back(decimal(row));
  }
  emit_rows(rows, a.format, out);
  return kOk;
}

struct PolyArgs {
  std::string family;
  int n = 0;
  std::string format = "csv";
  std::string source = "auto";
  int signed_cap = 7;
};

Poly signed_family(const PolyArgs& a, bool use_oracle) {
  SignedEulerian s;
  if (use_oracle) {
    s = signed_eulerian(a.n, OracleConfig{10, a.signed_cap, 1});
  } else {
    s = signed_eulerian_from_gf(a.n).back();
  }
  if (a.family == "C") return s.c;
  if (a.family == "CT") return s.c_tilde;
  return t_poly_from(s);
}

int cmd_poly(const PolyArgs& a, std::ostream& out, std::ostream& err) {
  const bool from_zero = a.family == "P" || a.family == "Q" || a.family == "R";
  if (a.n < (from_zero ? 0 : 1)) {
    err << "poly: --n must be >= " << (from_zero ? 0 : 1) << " for family " << a.family << '\n';
    return kUsage;
  }
  if (a.n > kPolyCap) {
    err << "poly: --n " << a.n << " exceeds cap " << kPolyCap << '\n';
    return kLimitExceeded;
  }
  Poly p;
  if (a.family == "P" || a.family == "Q") {
    const auto d = derivative_polys(a.n);
    p = a.family == "P" ? d.p.back() : d.q.back();
  } else if (a.family == "A") {
    p = eulerian(a.n);
  } else if (a.family == "R") {
    p = r_poly(a.n);
  } else if (a.family == "G") {
    p = g_poly(a.n);
  } else if (a.family == "W" || a.family == "WL") {
    const auto [w, wl] = w_triangles(a.n);
    p = Poly::from_integers((a.family == "W" ? w : wl).row(a.n));
  } else {
    const bool use_oracle = a.source == "oracle" || (a.source == "auto" && a.n <= a.signed_cap);
    p = signed_family(a, use_oracle);
  }
  if (a.format == "csv") {
    out << csv(decimal(p)) << '\n';
  } else {
    out << to_json_array(decimal(p)) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> nmax;
  SuiteConfig config;
  std::optional<unsigned> jobs;
  std::string inject;
};

int cmd_verify(VerifyArgs a, std::ostream& out, std::ostream& err) {
  const Suite suite = parse_suite(a.suite);
  SuiteConfig& c = a.config;
  if (a.nmax) {
    switch (suite) {
      case Suite::kAll:
      case Suite::kIdentities: c.nmax_exact = *a.nmax; break;
      case Suite::kGf: c.gf_order = *a.nmax; break;
      case Suite::kRoots: c.roots_nmax = *a.nmax; break;
      case Suite::kClt: c.clt_nmax = *a.nmax; break;
      case Suite::kOracle: c.oracle_perm_n = *a.nmax; break;
    }
  }
  c.jobs = a.jobs.value_or(default_jobs());
  if (!a.inject.empty()) {
    Corruption corrupt;
    char sep = 0;
    std::istringstream is(a.inject);
    if (!(is >> corrupt.n >> sep >> corrupt.k) || sep != ',') {
      err << "verify: --inject-fault expects N,K\n";
      return kUsage;
    }
    c.corrupt = corrupt;
  }
  validate(c, suite);
  const ReportDocument report = make_report(suite, c, run_suite(suite, c));
  out << to_json(report);
  return report.aggregate ? kOk : kVerificationFailed;
}

struct OracleArgs {
  std::string stat;
  int n = 0;
  std::optional<unsigned> jobs;
  int perm_cap = 10;
  int signed_cap = 7;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const OracleConfig config{a.perm_cap, a.signed_cap, a.jobs.value_or(default_jobs())};
  if (a.stat == "alt") {
    out << to_string(count_alternating(a.n, config)) << '\n';
    return kOk;
  }
  static const std::map<std::string, Stat, std::less<>> kStats{
      {"pk", Stat::kPk}, {"lpk", Stat::kLpk}, {"des", Stat::kDes}, {"desb", Stat::kDesB}, {"ades", Stat::kAdes}};
  const Stat stat = kStats.at(a.stat);
  const StatDistribution d = (stat == Stat::kDesB || stat == Stat::kAdes) ? signed_distribution(a.n, stat, config)
                                                                         : distribution(a.n, stat, config);
  out << csv(decimal(d.counts)) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Peak statistics, derivative polynomials and their identities in exact arithmetic", "peakpoly"};
  app.require_subcommand(1);

  TriangleArgs tri;
  auto* triangle = app.add_subcommand("triangle", "Print rows of the R, W or WL coefficient triangle");
  triangle->add_option("--family", tri.family, "R, W or WL")->required()->check(CLI::IsMember({"R", "W", "WL"}));
  triangle->add_option("--nmax", tri.nmax, "Last row")->required();
  triangle->add_option("--format", tri.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "Print the coefficients of one polynomial, ascending by degree");
  poly->add_option("--family", pa.family, "P, Q, A, R, G, T, C, CT, W or WL")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "A", "R", "G", "T", "C", "CT", "W", "WL"}));
  poly->add_option("--n", pa.n, "Index")->required();
  poly->add_option("--format", pa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  poly->add_option("--source", pa.source, "C/CT/T source: auto, oracle or gf")
      ->check(CLI::IsMember({"auto", "oracle", "gf"}));
  poly->add_option("--signed-cap", pa.signed_cap, "Largest n enumerated over signed permutations");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("--suite", va.suite, "all, identities, gf, roots, clt or oracle")
      ->check(CLI::IsMember({"all", "identities", "gf", "roots", "clt", "oracle"}));
  verify->add_option("--nmax", va.nmax, "Range of the selected suite");
  verify->add_option("--nmax-exact", va.config.nmax_exact, "Range for recurrence identities");
  verify->add_option("--oracle-n", va.config.oracle_perm_n, "Enumeration range over S_n");
  verify->add_option("--oracle-signed-n", va.config.oracle_signed_n, "Enumeration range over signed permutations");
  verify->add_option("--oracle-cap", va.config.oracle.perm_limit, "Enumeration cap over S_n");
  verify->add_option("--oracle-signed-cap", va.config.oracle.signed_limit, "Enumeration cap over signed permutations");
  verify->add_option("--gf-order", va.config.gf_order, "z-order for generating function checks");
  verify->add_option("--roots-nmax", va.config.roots_nmax, "Range for root certification");
  verify->add_option("--clt-nmax", va.config.clt_nmax, "Range for mean/variance checks");
  verify->add_option("--jobs", va.jobs, "Worker threads (default: PEAKPOLY_JOBS or hardware)");
  verify->add_option("--inject-fault", va.inject, "Test hook: add 1 to R_{N,K}, given as N,K")->group("");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Enumerate a permutation statistic distribution");
  oracle->add_option("--stat", oa.stat, "pk, lpk, des, desb, ades or alt")
      ->required()
      ->check(CLI::IsMember({"pk", "lpk", "des", "desb", "ades", "alt"}));
  oracle->add_option("--n", oa.n, "Size")->required();
  oracle->add_option("--jobs", oa.jobs, "Worker threads (default: PEAKPOLY_JOBS or hardware)");
  oracle->add_option("--cap", oa.perm_cap, "Enumeration cap over S_n");
  oracle->add_option("--signed-cap", oa.signed_cap, "Enumeration cap over signed permutations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "peakpoly: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kUsage;
  }

  try {
    if (*triangle) return cmd_triangle(tri, out, err);
    if (*poly) return cmd_poly(pa, out, err);
    if (*verify) return cmd_verify(std::move(va), out, err);
    if (*oracle) return cmd_oracle(oa, out);
  } catch (const Error& e) {
    err << "peakpoly: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::kLimitExceeded: return kLimitExceeded;
      case Errc::kInvalidArgument:
      case Errc::kUnknownFamily: return kUsage;
      default: return kVerificationFailed;
    }
  }
  return kUsage;
}

}  // namespace peakpoly::cli
