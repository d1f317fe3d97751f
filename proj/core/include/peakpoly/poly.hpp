#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peakpoly/rational.hpp"

namespace peakpoly {

// Degree of a polynomial. An empty optional is the degree of the zero
// polynomial (minus infinity).
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals.
///
/// coeffs()[i] is the coefficient of x^i. The highest stored coefficient is
/// always nonzero; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  static Poly from_integers(std::span<const Integer> coeffs);
  // The identity polynomial x.
  static Poly x();

  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  // Coefficient of x^i; zero beyond the stored range.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& at) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
  friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  bool has_integer_coeffs() const;
  // Integer coefficients, valid only when has_integer_coeffs().
  std::vector<Integer> integer_coeffs() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly derivative(const Poly& p);
Poly pow(const Poly& p, unsigned e);
// p(q(x))
Poly compose(const Poly& p, const Poly& q);
// p(x^k)
Poly stretch(const Poly& p, unsigned k);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Euclidean division. Throws Errc::kDivisionByZeroPoly when d is zero.
DivMod divmod(const Poly& p, const Poly& d);

// q with p == q * d. Throws Errc::kNonzeroRemainder when d does not divide p.
Poly exact_div(const Poly& p, const Poly& d);

// den^clear_power * p(num/den) as a polynomial, i.e.
// sum_k p_k * num^k * den^(clear_power - k).
Poly subst_cleared(const Poly& p, const Poly& num, const Poly& den, std::size_t clear_power);

// Monic gcd; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

// Positive rational multiple of p with coprime integer coefficients. Sign of
// every value is preserved, which is what Sturm chains need.
Poly primitive_part(const Poly& p);

// "c0,c1,...,cn"; the zero polynomial prints as "0".
std::string to_csv(const Poly& p);
std::string to_string(const Poly& p);

}  // namespace peakpoly
