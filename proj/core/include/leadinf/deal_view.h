#ifndef LEADINF_DEAL_VIEW_H_
#define LEADINF_DEAL_VIEW_H_

#include <array>
#include <string>
#include <string_view>

#include "leadinf/card.h"
#include "leadinf/hand.h"

namespace leadinf {

inline constexpr int kHandSize = 13;
inline constexpr int kHiddenCards = 26;

// What declarer sees before the opening lead: their own hand, dummy, and the
// strain. The remaining 26 cards are split 13/13 between the leader and the
// leader's partner.
class DealView {
 public:
  // Throws InvalidDeal unless both hands hold 13 cards and are disjoint.
  DealView(Hand declarer, Hand dummy, Strain strain);

  Hand declarer() const { return declarer_; }
  Hand dummy() const { return dummy_; }
  Strain strain() const { return strain_; }
  Hand hidden() const { return hidden_; }

  RankMask HiddenRanks(Suit s) const { return hidden_.Ranks(s); }
  // n(s): hidden cards of suit s.
  int HiddenCount(Suit s) const { return hidden_.Length(s); }
  bool IsHidden(Card c) const { return hidden_.Contains(c); }

 private:
  Hand declarer_;
  Hand dummy_;
  Strain strain_;
  Hand hidden_;
};

// Deal file format, one `key: value` per line:
//   declarer: AKQ2.T98.543.J76
//   dummy: 6542.JT9.JT9.QJT
//   strain: NT
// Blank lines and lines starting with '#' are ignored.
DealView ParseDealText(std::string_view text);
std::string FormatDealText(const DealView& dv);

}  // namespace leadinf

#endif  // LEADINF_DEAL_VIEW_H_
