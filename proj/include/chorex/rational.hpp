#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace chorex {

using BigInt = boost::multiprecision::cpp_int;
// Canonical form (lowest terms, positive denominator) is maintained by the type.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers, and exact decimals ("0.5", "-1.25e-2").
// Throws SchemaError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& q);

// Largest integer multiple of unit that is <= v. unit must be > 0.
Rational floor_to_multiple(const Rational& v, const Rational& unit);

// Exact square root if v is a perfect square of a rational, else nullopt.
std::optional<Rational> exact_sqrt(const Rational& v);

// 2^e for possibly negative e.
Rational pow2(int e);

// Exact conversion; doubles are dyadic rationals. Throws on NaN/inf.
Rational rational_from_double(double v);

double to_double(const Rational& q);

}  // namespace chorex
