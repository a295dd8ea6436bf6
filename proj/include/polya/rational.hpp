#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polya {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational in lowest terms with positive denominator.
///
/// Backed by GMP's mpq_class. Every value produced by this library is
/// canonicalized; values built directly from (num, den) pairs must go
/// through make_rational().
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses the grammar  -?[0-9]+("/"[1-9][0-9]*)?  into a canonical rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Largest integer not exceeding r.
Integer floor(const Rational& r);

/// Smallest-denominator rational in the closed interval [lo, hi], lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace polya
