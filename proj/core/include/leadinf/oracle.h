#ifndef LEADINF_ORACLE_H_
#define LEADINF_ORACLE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "leadinf/deal_view.h"
#include "leadinf/exact.h"
#include "leadinf/inference.h"
#include "leadinf/rules.h"

namespace leadinf {

// Ground truth computed in the unfactored space of all C(26,13) leader hands.
struct OracleReport {
  std::vector<Card> hidden_cards;        // ascending card order
  std::vector<ExactCount> card_counts;   // consistent hands holding each card
  ExactCount consistent = 0;
  ExactCount total = 0;

  // P(card in leader's hand | consistent). Throws std::out_of_range for a
  // card that is not hidden, std::domain_error when nothing is consistent.
  Rational Posterior(Card card) const;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

using HandPredicate = std::function<bool(Hand leader)>;

// Enumerates every 13-card leader hand drawn from dv's hidden cards in
// increasing subset-mask order and counts those satisfying `keep`. Work is
// split over `threads` contiguous index ranges (<= 0: hardware threads) and
// merged with integer addition, so the report does not depend on threads.
OracleReport OracleCount(const DealView& dv, const HandPredicate& keep, int threads = 1);

// Keeps the hands whose full-hand lead is ev.lead. Throws InfeasibleEvidence
// for a visible lead and ZeroEvidence when no hand is consistent.
OracleReport OraclePosterior(const DealView& dv, const Evidence& ev, const RuleSet& rules,
                             int threads = 1);

struct McReport {
  std::vector<Card> hidden_cards;  // ascending card order
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::vector<std::uint64_t> card_hits;  // accepted hands holding each card

  double acceptance_rate() const {
    return static_cast<double>(accepted) / static_cast<double>(samples);
  }
  double Estimate(Card card) const;
  // Binomial standard error of Estimate over the accepted samples.
  double StdError(Card card) const;

  friend bool operator==(const McReport&, const McReport&) = default;
};

// Rejection sampler: draws uniform 13/13 splits of the hidden cards and keeps
// the ones whose lead is ev.lead. Samples are drawn in fixed blocks, each
// with a seed derived from `seed`, so output depends only on (seed, samples).
// Throws NoAcceptedSamples if nothing is accepted.
McReport McPosterior(const DealView& dv, const Evidence& ev, const RuleSet& rules,
                     std::uint64_t samples, std::uint64_t seed, int threads = 1);

// Uniformly random declarer/dummy hands and strain. Throws
// std::invalid_argument when count < 1.
std::vector<DealView> SampleDeals(std::uint64_t seed, int count);

}  // namespace leadinf

#endif  // LEADINF_ORACLE_H_
