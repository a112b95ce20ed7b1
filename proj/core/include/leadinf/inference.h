#ifndef LEADINF_INFERENCE_H_
#define LEADINF_INFERENCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leadinf/card.h"
#include "leadinf/deal_view.h"
#include "leadinf/holding.h"
#include "leadinf/prior.h"
#include "leadinf/probability.h"
#include "leadinf/rules.h"

namespace leadinf {

// The observed opening lead.
struct Evidence {
  Card lead;
};

// How P(lead | leader's holding) is computed.
//   kWithinSuit: 1 if the within-suit selector maps the holding to the lead.
//     Ignores what the choice of suit says about the other suits.
//   kFullExact: fraction of the leader's possible 13-card completions whose
//     full-hand lead is the observed card, counted exactly.
//   kMonteCarlo: unbiased estimate of kFullExact from sampled completions.
class LikelihoodMode {
 public:
  enum class Kind { kWithinSuit, kFullExact, kMonteCarlo };

  static LikelihoodMode WithinSuit() { return LikelihoodMode(Kind::kWithinSuit, 0, 0); }
  static LikelihoodMode FullExact() { return LikelihoodMode(Kind::kFullExact, 0, 0); }
  // Throws std::invalid_argument when samples == 0.
  static LikelihoodMode MonteCarlo(std::uint64_t samples, std::uint64_t seed);

  Kind kind() const { return kind_; }
  std::uint64_t samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }

  // "within-suit", "full" or "mc".
  std::string name() const;

  friend bool operator==(const LikelihoodMode&, const LikelihoodMode&) = default;

 private:
  LikelihoodMode(Kind kind, std::uint64_t samples, std::uint64_t seed)
      : kind_(kind), samples_(samples), seed_(seed) {}

  Kind kind_;
  std::uint64_t samples_;
  std::uint64_t seed_;
};

// Throws InfeasibleEvidence if the lead is visible to declarer.
void ValidateEvidence(const DealView& dv, const Evidence& ev);

// The hand variable's value space for suit s of dv, in canonical order.
std::vector<Holding> EnumerateHoldings(const DealView& dv, Suit s);

// P(lead | holding). Throws InfeasibleEvidence if the holding's suit differs
// from the lead's, the holding is not drawn from hidden cards, or it cannot
// be completed to 13 cards. `threads` <= 0 means one per hardware thread.
Probability Likelihood(Holding h, const Evidence& ev, const RuleSet& rules, const DealView& dv,
                       const LikelihoodMode& mode, int threads = 1);

enum class ZeroEvidencePolicy {
  kError,           // throw ZeroEvidence
  kPossessionOnly,  // condition only on "leader holds the led card"
};

struct PosteriorOptions {
  ZeroEvidencePolicy on_zero = ZeroEvidencePolicy::kError;
  int threads = 1;
};

struct CardProbability {
  Card card;
  Probability p;
};

// Declarer's belief about the leader's holding in one suit.
struct BeliefState {
  Suit suit = Suit::kSpades;
  std::optional<Card> lead;  // empty for a prior-only belief
  LikelihoodMode mode = LikelihoodMode::WithinSuit();
  int hidden_count = 0;
  // Set when the rule set admitted no holding and the possession-only
  // fallback was applied.
  bool possession_only = false;

  std::vector<Holding> holdings;  // canonical order
  std::vector<Probability> posterior;
  // Hidden cards of the suit, highest first.
  std::vector<CardProbability> led_suit_marginals;
  // P(x in leader's hand) for every off-suit hidden card x; only when the
  // likelihood depends on the holding alone.
  std::optional<Probability> offsuit_marginal;
  // Normalizing constant sum_h prior(h) * likelihood(h).
  Probability z;
};

// Bayes update of `prior` on the observed lead. Throws InfeasibleEvidence
// for a visible lead or a prior over another suit, and ZeroEvidence when no
// holding explains the lead (unless options.on_zero says otherwise).
BeliefState Posterior(const DealView& dv, const Evidence& ev, const RuleSet& rules,
                      const HandVariablePrior& prior, const LikelihoodMode& mode,
                      const PosteriorOptions& options = {});

// The belief before any lead is seen.
BeliefState PriorBelief(const HandVariablePrior& prior);

// One table row; `card` is empty for the off-suit aggregate row.
struct MarginalRow {
  std::optional<Card> card;
  Probability p;
};

// Led-suit cards by descending probability, ties highest card first, then the
// off-suit aggregate row when the belief has one.
std::vector<MarginalRow> CardMarginals(const BeliefState& bs);

}  // namespace leadinf

#endif  // LEADINF_INFERENCE_H_
