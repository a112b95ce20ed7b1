#ifndef LEADINF_PROBABILITY_H_
#define LEADINF_PROBABILITY_H_

#include <optional>

#include "leadinf/exact.h"

namespace leadinf {

// Either an exact rational or a Monte Carlo estimate with its standard error.
class Probability {
 public:
  Probability() : Probability(Exact(0)) {}

  static Probability Exact(Rational value) { return Probability(std::move(value)); }
  static Probability Estimate(double value, double std_error) {
    return Probability(value, std_error);
  }

  bool is_exact() const { return exact_.has_value(); }
  // Throws std::bad_optional_access for estimates.
  const Rational& exact() const { return exact_.value(); }
  double value() const { return value_; }
  // Zero for exact values.
  double std_error() const { return std_error_; }

 private:
  explicit Probability(Rational value)
      : exact_(std::move(value)), value_(ToDouble(*exact_)), std_error_(0.0) {}
  Probability(double value, double std_error) : value_(value), std_error_(std_error) {}

  std::optional<Rational> exact_;
  double value_;
  double std_error_;
};

}  // namespace leadinf

#endif  // LEADINF_PROBABILITY_H_
