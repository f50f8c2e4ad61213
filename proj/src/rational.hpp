#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace geolab {

// Exact arithmetic used everywhere: arbitrary-precision integers and
// rationals kept in lowest terms with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// den may be negative or non-reduced; throws std::domain_error on den == 0.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& x);

// Accepts "-12", "a/b", "2.5", "71/26", "2e-10", "1.25e+3".
Rat parse_rat(const std::string& text);
Int parse_int(const std::string& text);

std::string to_string(const Int& x);
// "n/d", or just "n" when the value is an integer.
std::string to_string(const Rat& x);

// Correctly rounded (nearest, ties to even) fixed-point rendering with
// `digits` places after the decimal point; digits == 0 gives an integer.
std::string decimal_string(const Rat& x, unsigned digits);

Int gcd(const Int& a, const Int& b);
// x mod m normalized into [0, m); requires m > 0.
Int mod_floor(const Int& x, const Int& m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

Int pow10(unsigned k);

// Largest s with s*s <= x; requires x >= 0.
Int isqrt(const Int& x);

}  // namespace geolab
