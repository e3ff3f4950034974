#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace repring {

/// Arbitrary-precision integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator (boost::multiprecision maintains that normal form).
using Rational = boost::multiprecision::cpp_rational;

/// True when `q` has denominator 1.
bool is_integer(const Rational& q);

/// Numerator of `q` as an Int (sign carried here).
Int rational_num(const Rational& q);

/// Denominator of `q` as a positive Int.
Int rational_den(const Rational& q);

/// Renders `q` as "num/den", or just "num" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Parses "num/den" or a bare integer (optional leading '-').
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Least common multiple of two nonnegative integers; lcm(0, x) == 0.
Int lcm_int(const Int& a, const Int& b);

/// Converts to int64_t, throwing std::overflow_error when out of range.
long long to_int64(const Int& v);

}  // namespace repring
