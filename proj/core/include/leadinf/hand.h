#ifndef LEADINF_HAND_H_
#define LEADINF_HAND_H_

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leadinf/card.h"

namespace leadinf {

// 13-bit set of ranks within one suit; bit r is Rank r.
using RankMask = std::uint16_t;
inline constexpr RankMask kAllRanks = (1u << kNumRanks) - 1;

// A set of cards backed by a 52-bit mask (bit i is Card::FromIndex(i)).
class Hand {
 public:
  constexpr Hand() = default;
  constexpr explicit Hand(std::uint64_t mask) : mask_(mask) {}

  static constexpr Hand FullDeck() { return Hand((std::uint64_t{1} << kNumCards) - 1); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }

  constexpr bool Contains(Card c) const { return (mask_ >> c.index()) & 1; }
  constexpr void Add(Card c) { mask_ |= std::uint64_t{1} << c.index(); }
  constexpr void Remove(Card c) { mask_ &= ~(std::uint64_t{1} << c.index()); }

  constexpr RankMask Ranks(Suit s) const {
    return static_cast<RankMask>((mask_ >> (SuitIndex(s) * kNumRanks)) & kAllRanks);
  }
  constexpr int Length(Suit s) const { return std::popcount(Ranks(s)); }

  constexpr Hand operator|(Hand o) const { return Hand(mask_ | o.mask_); }
  constexpr Hand operator&(Hand o) const { return Hand(mask_ & o.mask_); }
  // Set difference.
  constexpr Hand operator-(Hand o) const { return Hand(mask_ & ~o.mask_); }

  // Cards in ascending card order.
  std::vector<Card> Cards() const;

  friend constexpr bool operator==(const Hand&, const Hand&) = default;

 private:
  std::uint64_t mask_ = 0;
};

constexpr Hand SuitHand(Suit s, RankMask ranks) {
  return Hand(static_cast<std::uint64_t>(ranks) << (SuitIndex(s) * kNumRanks));
}

// Parses dot-separated S.H.D.C notation, e.g. "AKQ2.T98.543.J76". A void is
// an empty group or '-'. Throws ParseError on duplicate or unknown ranks or a
// group count other than four. The hand size is not checked.
Hand ParseHand(std::string_view text);

// Canonical notation: ranks descending within each suit, voids empty.
std::string FormatHand(Hand hand);

// Ranks of one suit, highest first, e.g. "KT93"; "-" for an empty set.
std::string FormatRanks(RankMask ranks);

// A=4 K=3 Q=2 J=1.
int Hcp(Hand cards);
int Hcp(RankMask ranks);

}  // namespace leadinf

#endif  // LEADINF_HAND_H_
