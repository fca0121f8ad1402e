#pragma once

// Exact arithmetic types.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace altab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses `p`, `p/q` or a finite decimal such as `0.25`.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);

}  // namespace altab
