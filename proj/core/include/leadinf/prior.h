#ifndef LEADINF_PRIOR_H_
#define LEADINF_PRIOR_H_

#include <filesystem>
#include <string_view>
#include <vector>

#include "leadinf/deal_view.h"
#include "leadinf/exact.h"
#include "leadinf/holding.h"

namespace leadinf {

// Probability distribution of the hand variable: the leader's holding in one
// suit, over all 2^n subsets of that suit's hidden ranks.
class HandVariablePrior {
 public:
  // `weights` is aligned with EnumerateHoldings(suit, hidden) and is
  // renormalized to sum to one. Throws std::invalid_argument on a size
  // mismatch, a negative weight, or a zero total.
  HandVariablePrior(Suit suit, RankMask hidden, std::vector<Rational> weights);

  Suit suit() const { return suit_; }
  RankMask hidden_ranks() const { return hidden_; }
  int hidden_count() const { return std::popcount(hidden_); }

  // Canonical order, see EnumerateHoldings.
  const std::vector<Holding>& holdings() const { return holdings_; }
  const std::vector<Rational>& weights() const { return weights_; }

  // Zero for holdings outside the hidden ranks of the suit.
  Rational Weight(Holding h) const;

  // P(card in leader's hand) under this prior.
  Rational Marginal(Card card) const;

 private:
  Suit suit_;
  RankMask hidden_;
  std::vector<Holding> holdings_;
  std::vector<Rational> weights_;
};

// Probability that one specific k-subset of the n hidden cards of a suit is
// exactly the leader's holding when the 26 hidden cards are split 13/13
// uniformly: C(26 - n, 13 - k) / C(26, 13). Throws std::out_of_range unless
// 0 <= k <= n <= 13.
Rational HoldingPrior(int n, int k);

// Uniform-deal prior over the leader's holding in suit s.
HandVariablePrior PriorDistribution(const DealView& dv, Suit s);

// Reads an externally computed prior. One holding per line,
// `<ranks> <weight>` with `-` for the empty holding, e.g. `KT3 0.012`;
// `#` starts a comment.
// Unlisted holdings get weight zero and the result is renormalized. Throws
// ParseError on unknown or non-hidden ranks, duplicate holdings, malformed
// weights, or a zero total.
HandVariablePrior ParseExternalPrior(std::string_view text, const DealView& dv, Suit s);
HandVariablePrior LoadExternalPrior(const std::filesystem::path& file, const DealView& dv, Suit s);

}  // namespace leadinf

#endif  // LEADINF_PRIOR_H_
