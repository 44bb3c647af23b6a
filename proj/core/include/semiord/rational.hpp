#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace semiord {

// Exact arbitrary-precision rationals.  Everything order-theoretic in this
// library is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Renders "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

// Parses "p" or "p/q" (optionally signed).  Throws ParseError.
Rational rat_parse(const std::string& text);

// Least integer n with n >= q, as a Rational-friendly Int.
Int rat_ceil(const Rational& q);

}  // namespace semiord
