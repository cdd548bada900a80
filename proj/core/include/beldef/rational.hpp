#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace beldef {

/// Exact rational number; every quantity in the belief kernel is one of
/// these. Floating point is not used anywhere in the numeric path.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// base^k for integer k >= 0 by repeated squaring.
Rational rational_pow(const Rational& base, unsigned long k);

/// Parses "3", "-2/5", "0.01" or "1e-4" into an exact rational.
/// Throws beldef::ParseError on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace beldef
