#include <doctest.h>

#include <random>

#include "peakpoly/error.hpp"
#include "peakpoly/families.hpp"
#include "peakpoly/roots.hpp"

using namespace peakpoly;

TEST_CASE("Sturm counts match products of known rational roots") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    Poly p{1};
    const int count = 1 + trial % 6;
    while (static_cast<int>(roots.size()) < count) {
      const Rational r = make_rational(num(rng), den(rng));
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      p *= Poly(std::vector<Rational>{-r, Rational(1)});
    }
    // An irreducible quadratic factor adds no real roots.
    p *= Poly{1, 0, 1};
    REQUIRE(is_squarefree(p));
    const auto intervals = isolate_roots(p);
    CHECK(intervals.size() == roots.size());
    for (const Interval& iv : intervals) {
      const auto inside =
          std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return iv.lo <= r && r <= iv.hi; });
      CHECK(inside == 1);
    }
    CHECK(count_roots_in(p, Rational(-1000), Rational(1001)) == count);
  }
}

TEST_CASE("multiplicity and squarefree part") {
  const Poly p = pow(Poly{1, 1}, 3) * Poly{-2, 1};
  CHECK(multiplicity_at(p, Rational(-1)) == 3);
  CHECK(multiplicity_at(p, Rational(2)) == 1);
  CHECK(multiplicity_at(p, Rational(0)) == 0);
  CHECK_FALSE(is_squarefree(p));
  CHECK(squarefree_part(p) == Poly{-2, -1, 1});
  CHECK_THROWS_AS(count_roots_in(p, Rational(0), Rational(3)), Error);
  CHECK_THROWS_AS(count_roots_in(Poly{-2, 1}, Rational(2), Rational(3)), Error);
  CHECK_THROWS_AS(count_roots_in(Poly{-2, 1}, Rational(3), Rational(1)), Error);
}

TEST_CASE("refinement narrows an isolating interval") {
  const Poly p{-2, 0, 1};
  const auto iv = isolate_roots(p);
  REQUIRE(iv.size() == 2);
  const Interval r = refine(p, iv[1], make_rational(1, 1000000));
  CHECK(r.hi - r.lo <= make_rational(1, 1000000));
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi > 2);
}

TEST_CASE("root structure of R_n") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    const RootReport r = verify_root_structure(n);
    CHECK(r.mult_minus1 == n / 2 + 1);
    CHECK(static_cast<int>(r.isolating_intervals.size()) == (n + 1) / 2 - 1);
    CHECK(r.all_in_range);
    const InterlacingReport il = verify_interlacing(n);
    CHECK(il.n == n);
  }
}

TEST_CASE("mean, variance and mode") {
  const CltStats s = clt_stats(6);
  CHECK(s.value_at_one == 2 * factorial(6));
  CHECK(s.mu == make_rational(11, 3));
  CHECK(s.sigma2 == make_rational(56, 45));
  const ModeReport m5 = mode_check(5);
  CHECK(m5.max_value == 88);
  CHECK(m5.in_bracket);
  CHECK(mode_check(6).max_value == 479);
  CHECK(mode_check(2).max_value == 2);
  CHECK_THROWS_AS(mode_check(1), Error);
}

TEST_CASE("the largest coefficient is unique for small n") {
  for (int n = 2; n <= 25; ++n) {
    CAPTURE(n);
    const ModeReport m = mode_check(n);
    CHECK_FALSE(m.tie);
    CHECK(m.in_bracket);
  }
}
