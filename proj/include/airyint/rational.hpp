#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace airyint {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a plain decimal such as "-1.25" into an exact value.
/// Throws Error(InvalidArgument) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Nearest double (GMP truncates; this rounds correctly enough for evaluation).
double to_double(const Rational& value);

Integer binomial(unsigned n, unsigned k);

}  // namespace airyint
