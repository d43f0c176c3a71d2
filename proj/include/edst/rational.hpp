#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace edst {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Largest integer not exceeding r.
Integer floor_of(const Rational& r);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Mixed form for display: "7 1/2", "2/3", "12".
std::string to_mixed_string(const Rational& r);

// Accepts "p", "p/q" and "-p/q". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace edst
