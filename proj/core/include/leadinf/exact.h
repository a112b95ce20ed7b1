#ifndef LEADINF_EXACT_H_
#define LEADINF_EXACT_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace leadinf {

using ExactCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(a, b); zero when b < 0 or b > a. Throws std::invalid_argument if a < 0.
ExactCount Binom(int a, int b);

// Same value as a machine integer, for hot loops. Requires 0 <= a <= 52.
std::uint64_t Binom64(int a, int b);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string RationalString(const Rational& r);
double ToDouble(const Rational& r);

// Parses a non-negative decimal such as "3", "0.012" or ".5" exactly.
// Throws ParseError.
Rational ParseDecimal(std::string_view text);

// Parses "p/q" or "p". Throws ParseError.
Rational ParseRational(std::string_view text);

}  // namespace leadinf

#endif  // LEADINF_EXACT_H_
