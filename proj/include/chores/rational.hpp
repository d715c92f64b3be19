#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chores {

// Exact rational arithmetic for makespans, ratios and thresholds. Always kept
// in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "p/q" always, including integers ("3/1"), for CSV ratio columns.
std::string format_fraction(const Rational& r);

// "p" for integers, "p/q" otherwise.
std::string format_value(const Rational& r);

double to_double(const Rational& r);

BigInt ceil(const Rational& r);
BigInt floor(const Rational& r);

// Accepts "p", "p/q" or a finite decimal such as "0.1" (converted exactly).
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace chores
