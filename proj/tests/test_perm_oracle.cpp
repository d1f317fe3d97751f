#include <doctest.h>

#include "oracles.hpp"
#include "peakpoly/error.hpp"
#include "peakpoly/perm_oracle.hpp"

using namespace peakpoly;

namespace {

Poly as_poly(const StatDistribution& d) { return Poly::from_integers(d.counts); }

}  // namespace

TEST_CASE("statistics of single permutations") {
  const std::vector<int> p{2, 5, 1, 4, 3};
  const PermStats s = perm_stats(p);
  CHECK(s.pk == 2);
  CHECK(s.lpk == 2);
  CHECK(s.des == 2);
  const std::vector<int> q{3, 1, 2};
  CHECK(perm_stats(q).pk == 0);
  CHECK(perm_stats(q).lpk == 1);
  CHECK_THROWS_AS(perm_stats(std::vector<int>{1, 1, 2}), Error);

  const std::vector<int> w{-2, 1, 3};
  const SignedStats t = signed_stats(w);
  CHECK(t.des_b == 1);
  CHECK(t.ades == 2);
  CHECK_THROWS_AS(signed_stats(std::vector<int>{0, 1}), Error);
}

TEST_CASE("small distributions") {
  CHECK(distribution(3, Stat::kPk).counts == to_integers({4, 2}));
  CHECK(signed_distribution(1, Stat::kAdes).counts == to_integers({0, 2}));
  CHECK(count_alternating(4) == 5);
  CHECK(count_reverse_alternating(5) == 16);
}

TEST_CASE("distributions agree with an independent enumeration") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(as_poly(distribution(n, Stat::kPk)) == oracle::distribution_poly(n, oracle::peaks));
    CHECK(as_poly(distribution(n, Stat::kLpk)) == oracle::distribution_poly(n, oracle::left_peaks));
    CHECK(as_poly(distribution(n, Stat::kDes)) == oracle::distribution_poly(n, oracle::descents));
    CHECK(count_alternating(n) == oracle::alternating_count(n));
  }
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(as_poly(signed_distribution(n, Stat::kDesB)) == oracle::signed_distribution_poly(n, oracle::type_b_descents));
    CHECK(as_poly(signed_distribution(n, Stat::kAdes)) == oracle::signed_distribution_poly(n, oracle::affine_descents));
  }
}

TEST_CASE("left peaks exceed interior peaks by at most one") {
  oracle::for_each_perm(6, [](const std::vector<int>& p) {
    const PermStats s = perm_stats(p);
    const int d = s.lpk - s.pk;
    CHECK((d == 0 || d == 1));
  });
}

TEST_CASE("sharded enumeration does not depend on the job count") {
  for (Stat stat : {Stat::kPk, Stat::kLpk, Stat::kDes}) {
    const auto one = distribution(8, stat, OracleConfig{10, 7, 1});
    const auto many = distribution(8, stat, OracleConfig{10, 7, 5});
    CHECK(one.counts == many.counts);
  }
  CHECK(signed_distribution(5, Stat::kAdes, OracleConfig{10, 7, 1}).counts ==
        signed_distribution(5, Stat::kAdes, OracleConfig{10, 7, 3}).counts);
}

TEST_CASE("limits and invalid requests") {
  try {
    distribution(11, Stat::kPk);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kLimitExceeded);
  }
  CHECK_THROWS_AS(signed_distribution(8, Stat::kDesB), Error);
  CHECK_THROWS_AS(distribution(4, Stat::kDesB), Error);
  CHECK_THROWS_AS(distribution(0, Stat::kPk), Error);
}
