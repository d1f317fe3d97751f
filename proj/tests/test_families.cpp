#include <doctest.h>

#include "oracles.hpp"
#include "peakpoly/error.hpp"
#include "peakpoly/families.hpp"
#include "peakpoly/perm_oracle.hpp"

using namespace peakpoly;

TEST_CASE("R triangle rows and recurrence shape") {
  const CoeffTriangle t = r_triangle(6);
  CHECK(t.first_row == 0);
  CHECK(t.last_row() == 6);
  CHECK(t.row(3) == to_integers({1, 4, 5, 2}));
  CHECK(t.row(6) == to_integers({1, 32, 179, 416, 479, 272, 61}));
  CHECK(r_poly(5) == Poly{1, 16, 58, 88, 61, 16});
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(r_poly(n) == oracle::r_by_enumeration(n));
  }
}

TEST_CASE("W and left-peak triangles") {
  const auto [w, wl] = w_triangles(6);
  CHECK(w.first_row == 1);
  CHECK(w.row(4) == to_integers({8, 16}));
  CHECK(wl.row(4) == to_integers({1, 18, 5}));
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto [wn, wln] = w_triangles(n);
    CHECK(Poly::from_integers(wn.row(n)) == oracle::distribution_poly(n, oracle::peaks));
    CHECK(Poly::from_integers(wln.row(n)) == oracle::distribution_poly(n, oracle::left_peaks));
    CHECK(interleave(wn.row(n), wln.row(n)) == r_poly(n));
  }
}

TEST_CASE("Eulerian polynomials match the alternating-sum formula") {
  CHECK(eulerian(3) == Poly{1, 4, 1});
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(eulerian(n) == oracle::eulerian_closed(n));
  }
}

TEST_CASE("derivative polynomials") {
  const DerivativePolys d = derivative_polys(4);
  CHECK(d.p[0] == Poly{0, 1});
  CHECK(d.p[1] == Poly{1, 0, 1});
  CHECK(d.p[2] == Poly{0, 2, 0, 2});
  CHECK(d.q[0] == Poly{1});
  CHECK(d.q[2] == Poly{1, 0, 2});
  const auto e = oracle::andre_numbers(14);
  const DerivativePolys big = derivative_polys(14);
  for (int n = 0; n <= 14; ++n) {
    CAPTURE(n);
    const Rational at_zero = n % 2 ? big.p[static_cast<std::size_t>(n)](0) : big.q[static_cast<std::size_t>(n)](0);
    CHECK(at_zero == e[static_cast<std::size_t>(n)]);
  }
  CHECK(euler_numbers(14) == e);
  const DerivativePolys c = cvijovic_reconstruct(10);
  CHECK(c.p == derivative_polys(10).p);
  CHECK(c.q == derivative_polys(10).q);
}

TEST_CASE("signed Eulerian polynomials") {
  const SignedEulerian s = signed_eulerian(4);
  CHECK(s.c == Poly{1, 76, 230, 76, 1});
  CHECK(t_poly(3) == pow(Poly{1, 1}, 4) * eulerian(3));
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const SignedEulerian e = signed_eulerian(n);
    CHECK(e.c == oracle::signed_distribution_poly(n, oracle::type_b_descents));
    CHECK(e.c_tilde == oracle::signed_distribution_poly(n, oracle::affine_descents));
    const auto [w, wl] = w_triangles(n);
    const SignedEulerian from_peaks =
        signed_eulerian_from_peaks(n, Poly::from_integers(w.row(n)), Poly::from_integers(wl.row(n)));
    CHECK(from_peaks.c == e.c);
    CHECK(from_peaks.c_tilde == e.c_tilde);
  }
}

TEST_CASE("Bell polynomials and Stirling numbers") {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(stirling2(n, k) == oracle::set_partitions(n, k));
    }
  }
  CHECK(stirling2(4, 2) == 7);

  const std::vector<Poly> args = bell_peak_arguments(4);
  CHECK(bell_partial(4, 1, args) == Poly{1, 0, -1});
  CHECK(bell_partial(4, 2, args) == Poly{7, 0, -4});
  CHECK(bell_partial(4, 3, args) == Poly{6});
  CHECK(bell_partial(4, 4, args) == Poly{1});
  CHECK(bell_formula_r(4) == Poly{1, 16, 58, 88, 61, 16});

  // B_{4,2} = 4 x1 x3 + 3 x2^2 with generic constant arguments.
  const std::vector<Poly> generic{Poly{2}, Poly{3}, Poly{5}, Poly{7}};
  CHECK(bell_partial(4, 2, generic) == Poly{4 * 2 * 5 + 3 * 3 * 3});
  CHECK(bell_partial(0, 0, std::vector<Poly>{}) == Poly{1});
  CHECK_THROWS_AS(bell_partial(4, 2, std::vector<Poly>{Poly{1}}), Error);

  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(bell_formula_r(n) == r_poly(n + 1));
    CHECK(x0_reduction_check(n));
    CHECK(x1_reduction_check(n));
  }
}

TEST_CASE("G_n is R_n with its (1+x) factors removed") {
  CHECK(g_poly(5) == Poly{1, 13, 16});
  CHECK(g_poly(1) == Poly{1});
  for (int n = 1; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(g_poly(n) * pow(Poly{1, 1}, static_cast<unsigned>(n / 2 + 1)) == r_poly(n));
  }
}
