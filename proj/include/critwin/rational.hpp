#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace critwin {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Accepts "p/q", integers and plain decimals such as "-0.55". Every finite
// decimal is read exactly; exponents, "inf" and the like are rejected.
// Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "8/25", "-3", "0".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// printf("%.*g") rendering, 12 significant digits by default.
std::string to_decimal(const Rational& q, int significant = 12);

} // namespace critwin
