#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ocpoly {

// Arbitrary precision exact arithmetic. mpq_class keeps values in lowest
// terms with a positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;
using Point = std::vector<Rational>;

Rational make_rational(long numerator, long denominator = 1);

bool is_integer(const Rational& value);

// "p/q" in lowest terms, integers as "p/1". Used for every machine-readable
// emission.
std::string to_string(const Rational& value);

// "p/q", with integers printed as "p". Used for human-readable tables.
std::string to_compact_string(const Rational& value);

std::string to_string(const Integer& value);

// Accepts "p/q" and "p"; the result is canonicalized.
Rational parse_rational(std::string_view text);

std::string format_point(const Point& point);

Integer factorial(int n);

}  // namespace ocpoly
