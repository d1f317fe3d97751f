#include <doctest.h>

#include <random>

#include "peakpoly/error.hpp"
#include "peakpoly/poly.hpp"
#include "peakpoly/rational.hpp"

using namespace peakpoly;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = make_rational(num(rng), den(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rationals are canonical and reject zero denominators") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(pow2(70) == Integer("1180591620717411303424"));
}

TEST_CASE("polynomials are trimmed and the zero polynomial has no degree") {
  Poly z{0, 0, 0};
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(Poly{1, 2, 0}.degree() == 1);
  CHECK(to_csv(Poly{}) == "0");
  CHECK(to_csv(Poly{1, 0, 3}) == "1,0,3");
}

TEST_CASE("ring axioms and evaluation homomorphism on random inputs") {
  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly{});
    const Rational at = make_rational(trial - 100, 7);
    CHECK((a * b)(at) == a(at) * b(at));
    CHECK(compose(a, b)(at) == a(b(at)));
    CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
  }
}

TEST_CASE("exact division recovers random factors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Poly q = random_poly(rng, 8);
    Poly d = random_poly(rng, 5);
    if (d.is_zero()) d = Poly{1};
    CHECK(exact_div(q * d, d) == q);
    const DivMod dm = divmod(q, d);
    CHECK(dm.quotient * d + dm.remainder == q);
    if (!dm.remainder.is_zero()) CHECK(*dm.remainder.degree() < *d.degree());
  }
}

TEST_CASE("division errors carry their kind") {
  try {
    exact_div(Poly{1, 0, 1}, Poly{1, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNonzeroRemainder);
  }
  CHECK_THROWS_AS(divmod(Poly{1}, Poly{}), Error);
}

TEST_CASE("cleared substitution") {
  // p(y) = 1 + y with y = 4x/(1+x)^2, cleared by (1+x)^2.
  const Poly num{0, 4};
  const Poly den = pow(Poly{1, 1}, 2);
  CHECK(subst_cleared(Poly{1, 1}, num, den, 1) == Poly{1, 6, 1});
  CHECK(subst_cleared(Poly{1, 1}, num, den, 2) == Poly{1, 6, 1} * den);
  CHECK_THROWS_AS(subst_cleared(Poly{1, 0, 1}, num, den, 1), Error);
}

TEST_CASE("stretch, gcd and primitive part") {
  CHECK(stretch(Poly{1, 2, 3}, 2) == Poly{1, 0, 2, 0, 3});
  const Poly a = Poly{1, 1} * Poly{-2, 1};
  const Poly b = Poly{1, 1} * Poly{3, 1};
  CHECK(gcd(a, b) == Poly{1, 1});
  CHECK(primitive_part(Poly(std::vector<Rational>{make_rational(1, 2), make_rational(3, 4)})) == Poly{2, 3});
  CHECK(Poly{1, 4, 1}.has_integer_coeffs());
}
