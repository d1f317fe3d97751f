#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace peakpoly {

// GMP keeps mpq_class canonical after every arithmetic operation (reduced,
// positive denominator, zero as 0/1), so equality is structural.
using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws Errc::kInvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer pow2(unsigned n);

bool is_integer(const Rational& q);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

std::vector<Integer> to_integers(const std::vector<long>& values);

}  // namespace peakpoly
