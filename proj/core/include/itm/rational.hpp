#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace itm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den in lowest terms with the sign carried by the numerator.
// Throws std::invalid_argument when den is zero.
Rational make_rational(Int num, Int den);

// Largest integer not exceeding x.
Int floor_int(const Rational& x);

// Smallest integer not below x.
Int ceil_int(const Rational& x);

// Fractional part x - floor(x), always in [0, 1).
Rational frac_part(const Rational& x);

// Renders x as "num/den" with den >= 1, e.g. "3/4", "-1/2", "5/1".
std::string format_rational(const Rational& x);

// Parses "num/den" or a bare integer "num", with an optional leading sign
// on the numerator only. Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& text);

// Least common multiple of the reduced denominators of the given values.
// Returns 1 for an empty list.
Int common_denominator(const std::vector<Rational>& values);

}  // namespace itm
