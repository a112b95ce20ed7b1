#include "leadinf/rules.h"

#include <array>
#include <bit>
#include <stdexcept>

namespace leadinf {
namespace {

constexpr RankMask Bit(Rank r) { return static_cast<RankMask>(1u << RankIndex(r)); }

constexpr RankMask kHonorsWithTen =
    Bit(Rank::kAce) | Bit(Rank::kKing) | Bit(Rank::kQueen) | Bit(Rank::kJack) | Bit(Rank::kTen);

int HighestRank(RankMask ranks) { return std::bit_width(static_cast<unsigned>(ranks)) - 1; }
int LowestRank(RankMask ranks) { return std::countr_zero(static_cast<unsigned>(ranks)); }

// Rank index chosen by the tree plus the rule id that fired.
struct Selection {
  std::uint8_t rank;
  std::uint8_t rule;
};

Selection Select(RankMask ranks) {
  for (Rank top : {Rank::kAce, Rank::kKing, Rank::kQueen, Rank::kJack}) {
    const RankMask pair = Bit(top) | static_cast<RankMask>(Bit(top) >> 1);
    if ((ranks & pair) == pair) {
      return {static_cast<std::uint8_t>(RankIndex(top)),
              static_cast<std::uint8_t>(LeadRule::kTouchingHonors)};
    }
  }
  const int count = std::popcount(ranks);
  if (count >= 4) {
    RankMask rest = ranks;
    for (int i = 0; i < 3; ++i) rest &= static_cast<RankMask>(~(1u << HighestRank(rest)));
    return {static_cast<std::uint8_t>(HighestRank(rest)),
            static_cast<std::uint8_t>(LeadRule::kFourthBest)};
  }
  if (count == 3) {
    const int rank = (ranks & kHonorsWithTen) ? LowestRank(ranks) : HighestRank(ranks);
    return {static_cast<std::uint8_t>(rank), static_cast<std::uint8_t>(LeadRule::kThreeCard)};
  }
  if (count == 2) {
    return {static_cast<std::uint8_t>(HighestRank(ranks)),
            static_cast<std::uint8_t>(LeadRule::kDoubleton)};
  }
  return {static_cast<std::uint8_t>(HighestRank(ranks)),
          static_cast<std::uint8_t>(LeadRule::kSingleton)};
}

// The tree is suit-independent, so one table over all rank subsets serves
// every suit. Entry 0 (the empty holding) is unused.
const std::array<Selection, 1u << kNumRanks>& SelectionTable() {
  static const auto table = [] {
    std::array<Selection, 1u << kNumRanks> t{};
    for (unsigned m = 1; m < t.size(); ++m) t[m] = Select(static_cast<RankMask>(m));
    return t;
  }();
  return table;
}

}  // namespace

std::string LeadRuleId(LeadRule rule) { return "R" + std::to_string(static_cast<int>(rule)); }

WithinSuitTrace TraceWithinSuit(Holding holding) {
  if (holding.empty()) throw std::invalid_argument("within-suit selection on an empty holding");
  const Selection s = SelectionTable()[holding.ranks];
  return {static_cast<LeadRule>(s.rule), Card(holding.suit, static_cast<Rank>(s.rank))};
}

Card WithinSuitSelect(Holding holding) {
  if (holding.empty()) throw std::invalid_argument("within-suit selection on an empty holding");
  return Card(holding.suit, static_cast<Rank>(SelectionTable()[holding.ranks].rank));
}

Suit ChooseLeadSuit(Hand hand, Strain strain) {
  const std::optional<Suit> trump = TrumpSuit(strain);
  bool only_trumps = false;
  if (trump) only_trumps = hand.Length(*trump) == hand.size();

  std::optional<Suit> best;
  int best_length = -1;
  int best_hcp = -1;
  // Ascending suit order: a later suit wins ties on (length, hcp).
  for (int i = 0; i < kNumSuits; ++i) {
    const Suit s = static_cast<Suit>(i);
    if (trump && s == *trump && !only_trumps) continue;
    const RankMask ranks = hand.Ranks(s);
    const int length = std::popcount(ranks);
    if (length == 0) continue;
    const int hcp = Hcp(ranks);
    if (length > best_length || (length == best_length && hcp >= best_hcp)) {
      best = s;
      best_length = length;
      best_hcp = hcp;
    }
  }
  // An empty hand has no lead; any suit will do since its holding is empty.
  return best.value_or(Suit::kSpades);
}

std::optional<Card> BuiltinRules::SelectWithinSuit(Holding holding) const {
  if (holding.empty()) return std::nullopt;
  return WithinSuitSelect(holding);
}

std::optional<Card> ForcedSuitRules::SelectWithinSuit(Holding holding) const {
  if (holding.empty()) return std::nullopt;
  return WithinSuitSelect(holding);
}

std::string ForcedSuitRules::name() const {
  return std::string("forced-") + SuitChar(suit_);
}

CompletenessReport CheckCompleteness(const RuleSet& rules) {
  CompletenessReport report;
  for (Suit suit : kSuitsDescending) {
    for (unsigned m = 1; m <= kAllRanks; ++m) {
      const Holding holding{suit, static_cast<RankMask>(m)};
      const std::optional<Card> card = rules.SelectWithinSuit(holding);
      ++report.holdings_checked;
      if (!card || !holding.Contains(*card)) report.failures.push_back({holding, card});
    }
  }
  return report;
}

}  // namespace leadinf
