#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tropos {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
BigInt floor_of(const Rational& value);

/// Converts an integral rational to int64, throwing on overflow or a
/// non-integral value.
std::int64_t to_int64(const Rational& value);
std::int64_t to_int64(const BigInt& value);

/// Greatest rational g such that every input is an integer multiple of g.
/// All inputs must be positive.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace tropos
