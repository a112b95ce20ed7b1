#ifndef LEADINF_RULES_H_
#define LEADINF_RULES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leadinf/card.h"
#include "leadinf/hand.h"
#include "leadinf/holding.h"

namespace leadinf {

// A leading-rule decision tree, used as a black box mapping a 13-card hand
// to the card it leads.
class RuleSet {
 public:
  virtual ~RuleSet() = default;

  // Card led from a non-empty holding once its suit has been chosen. A
  // broken rule set may return nothing or a card outside the holding; the
  // completeness checker reports both.
  virtual std::optional<Card> SelectWithinSuit(Holding holding) const = 0;

  virtual Suit ChooseSuit(Hand hand, Strain strain) const = 0;

  // True when SelectWithinSuit depends only on the holding in the chosen
  // suit. Inference uses this to skip holdings that cannot produce the lead.
  virtual bool suit_local() const = 0;

  virtual std::string name() const = 0;

  // SelectWithinSuit applied to the holding in ChooseSuit's suit.
  std::optional<Card> LeadOfHand(Hand hand, Strain strain) const {
    const Suit suit = ChooseSuit(hand, strain);
    const RankMask ranks = hand.Ranks(suit);
    if (ranks == 0) return std::nullopt;
    return SelectWithinSuit(Holding{suit, ranks});
  }
};

enum class LeadRule { kTouchingHonors = 1, kFourthBest, kThreeCard, kDoubleton, kSingleton };

// "R1".."R5".
std::string LeadRuleId(LeadRule rule);

struct WithinSuitTrace {
  LeadRule rule;
  Card card;
};

// Fires the first matching branch:
//   R1 touching honors (AK, KQ, QJ, JT): top of the highest such pair
//   R2 four or more cards: fourth highest
//   R3 three cards: lowest with an honor (A K Q J T), highest without
//   R4 doubleton: higher
//   R5 singleton
// Throws std::invalid_argument on an empty holding.
WithinSuitTrace TraceWithinSuit(Holding holding);
Card WithinSuitSelect(Holding holding);

// Candidate suits are the non-trump suits (all four at no trump, or only the
// trump suit when everything else is void); picks the greatest
// (length, suit hcp, suit rank).
Suit ChooseLeadSuit(Hand hand, Strain strain);

// The default five-rule tree.
class BuiltinRules final : public RuleSet {
 public:
  std::optional<Card> SelectWithinSuit(Holding holding) const override;
  Suit ChooseSuit(Hand hand, Strain strain) const override { return ChooseLeadSuit(hand, strain); }
  bool suit_local() const override { return true; }
  std::string name() const override { return "builtin"; }
};

// Always leads from one fixed suit with the built-in within-suit selector.
// Hands void in that suit have no lead.
class ForcedSuitRules final : public RuleSet {
 public:
  explicit ForcedSuitRules(Suit suit) : suit_(suit) {}

  std::optional<Card> SelectWithinSuit(Holding holding) const override;
  Suit ChooseSuit(Hand, Strain) const override { return suit_; }
  bool suit_local() const override { return true; }
  std::string name() const override;

 private:
  Suit suit_;
};

struct CompletenessFailure {
  Holding holding;
  std::optional<Card> result;
};

struct CompletenessReport {
  int holdings_checked = 0;
  std::vector<CompletenessFailure> failures;

  bool complete() const { return failures.empty(); }
};

// Runs SelectWithinSuit on all 8191 non-empty holdings of each suit.
CompletenessReport CheckCompleteness(const RuleSet& rules);

}  // namespace leadinf

#endif  // LEADINF_RULES_H_
