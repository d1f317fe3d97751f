#include <doctest.h>

#include "peakpoly/error.hpp"
#include "peakpoly/identities.hpp"
#include "peakpoly/report.hpp"

using namespace peakpoly;

TEST_CASE("single-n identity checks") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(check_interleave(n).pass);
    CHECK(check_derivative_from_peaks(n).pass);
    CHECK(check_stembridge(n).pass);
    CHECK(check_petersen(n).pass);
  }
  for (int n = 1; n <= 6; ++n) CHECK(check_dilks(n).pass);
  CHECK(check_bell_and_reductions(10).pass);
}

TEST_CASE("small suites pass and are ordered deterministically") {
  SuiteConfig c;
  c.nmax_exact = 8;
  c.oracle_perm_n = 6;
  c.oracle_signed_n = 4;
  c.gf_order = 8;
  c.roots_nmax = 10;
  c.clt_nmax = 8;
  const auto a = run_suite(Suite::kAll, c);
  CHECK(aggregate_pass(a));
  c.jobs = 4;
  const auto b = run_suite(Suite::kAll, c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].check_id == b[i].check_id);
  CHECK(to_json(make_report(Suite::kAll, c, a)) == to_json(make_report(Suite::kAll, c, b)));
}

TEST_CASE("an injected fault is reported with a witness") {
  SuiteConfig c;
  c.nmax_exact = 8;
  c.corrupt = Corruption{5, 2, 1};
  const auto results = run_suite(Suite::kIdentities, c);
  CHECK_FALSE(aggregate_pass(results));
  bool found = false;
  for (const auto& r : results) {
    if (!r.pass && r.witness && r.witness->n == 5) found = true;
  }
  CHECK(found);
}

TEST_CASE("configuration validation") {
  SuiteConfig c;
  c.roots_nmax = 0;
  CHECK_THROWS_AS(validate(c, Suite::kRoots), Error);
  CHECK_NOTHROW(validate(c, Suite::kClt));
  c = SuiteConfig{};
  c.oracle_perm_n = 11;
  try {
    validate(c, Suite::kOracle);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kLimitExceeded);
  }
  CHECK(parse_suite("gf") == Suite::kGf);
  CHECK_THROWS_AS(parse_suite("everything"), Error);
}

TEST_CASE("report layout") {
  SuiteConfig c;
  c.clt_nmax = 5;
  const std::string json = to_json(make_report(Suite::kClt, c, run_suite(Suite::kClt, c)));
  CHECK(json.rfind("{\n  \"tool_version\": \"1.0.0\",\n  \"configuration\"", 0) == 0);
  CHECK(json.find("\"aggregate\": \"pass\"") != std::string::npos);
  CHECK(json.find("jobs") == std::string::npos);
  CHECK(json.back() == '\n');
}
