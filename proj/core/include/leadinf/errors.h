#ifndef LEADINF_ERRORS_H_
#define LEADINF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace leadinf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: hand notation, card codes, deal files, prior files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid domain value, e.g. overlapping declarer/dummy hands.
class InvalidDeal : public Error {
 public:
  using Error::Error;
};

// The observed lead cannot have come from the leader (visible card, suit
// mismatch, infeasible holding).
class InfeasibleEvidence : public Error {
 public:
  using Error::Error;
};

// No holding (or hand) is consistent with the lead under the rule set.
class ZeroEvidence : public Error {
 public:
  using Error::Error;
};

// Rejection sampling accepted nothing within its budget.
class NoAcceptedSamples : public Error {
 public:
  using Error::Error;
};

}  // namespace leadinf

#endif  // LEADINF_ERRORS_H_
