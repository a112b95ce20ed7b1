#include "leadinf/exact.h"

#include <cctype>
#include <stdexcept>

#include "leadinf/errors.h"

namespace leadinf {
namespace {

bool AllDigits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExactCount Binom(int a, int b) {
  if (a < 0) throw std::invalid_argument("Binom: negative a = " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  ExactCount result = 1;
  // Each partial product is itself C(a - b + i, i), so the division is exact.
  for (int i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

std::uint64_t Binom64(int a, int b) {
  if (a < 0 || a > 52) throw std::invalid_argument("Binom64: a out of range");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint64_t result = 1;
  for (int i = 1; i <= b; ++i) result = result * static_cast<std::uint64_t>(a - b + i) / i;
  return result;
}

std::string RationalString(const Rational& r) {
  const ExactCount num = boost::multiprecision::numerator(r);
  const ExactCount den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

Rational ParseDecimal(std::string_view text) {
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || !AllDigits(whole) || !AllDigits(frac)) {
    throw ParseError("invalid non-negative decimal '" + std::string(text) + "'");
  }
  ExactCount num = 0;
  ExactCount den = 1;
  for (char c : whole) num = num * 10 + (c - '0');
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Rational(num, den);
}

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  const std::string_view digits = !num.empty() && num.front() == '-' ? num.substr(1) : num;
  if (digits.empty() || den.empty() || !AllDigits(digits) || !AllDigits(den)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  const ExactCount d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(ExactCount(std::string{num}), d);
}

}  // namespace leadinf
