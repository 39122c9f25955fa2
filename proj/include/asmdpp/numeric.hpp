#pragma once

#include <gmpxx.h>

#include <string>

namespace asmdpp {

// Arbitrary precision scalars; thin aliases over gmpxx.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);

// Binomial coefficient with the conventions used by the matrix formulas:
// C(a, 0) = 1 for every a (so C(-1, 0) = 1), C(a, b) = 0 for b < 0,
// C(a, b) = 0 for 0 <= a < b. Negative a with b > 0 uses the usual
// extension (-1)^b C(b - a - 1, b).
Integer binom(long a, long b);

// Canonicalized num/den. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

// Throws std::domain_error unless r is integral.
Integer to_integer(const Rational& r);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// r^e for a machine exponent (negative allowed when r != 0).
Rational rpow(const Rational& r, long e);

}  // namespace asmdpp
