#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toric {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact value of a finite double (every double is a dyadic rational).
Rational rational_from_double(double x);

/// Parses "p", "p/q", or a plain decimal such as "-0.125" or "1e-3" exactly.
/// Throws InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Nearest double (GMP truncates; this rounds to nearest).
double to_double(const Rational& q);

int sign(const Rational& q);
int sign(const BigInt& z);

}  // namespace toric
