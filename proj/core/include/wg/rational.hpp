#pragma once

#include <gmpxx.h>

#include <string>

namespace wg {

using Int = mpz_class;

// Always canonical: positive denominator, coprime with the numerator.
using Rational = mpq_class;

Rational make_rational(long long num, long long den = 1);

// gmpxx has no long long overloads; funnel 64-bit integers through here.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);
std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

Int factorial(int n);
Int int_pow(long long base, int exp);

}  // namespace wg
