#include "leadinf/hand.h"

#include "leadinf/errors.h"

namespace leadinf {

std::vector<Card> Hand::Cards() const {
  std::vector<Card> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(Card::FromIndex(std::countr_zero(m)));
  }
  return out;
}

Hand ParseHand(std::string_view text) {
  Hand hand;
  int group = 0;
  bool group_is_dash = false;
  bool group_has_ranks = false;
  for (char c : text) {
    if (c == '.') {
      if (++group >= kNumSuits) {
        throw ParseError("hand '" + std::string(text) + "' has more than 4 suit groups");
      }
      group_is_dash = group_has_ranks = false;
      continue;
    }
    const Suit suit = kSuitsDescending[group];
    if (c == '-') {
      if (group_is_dash || group_has_ranks) {
        throw ParseError("misplaced '-' in hand '" + std::string(text) + "'");
      }
      group_is_dash = true;
      continue;
    }
    auto rank = RankFromChar(c);
    if (!rank) {
      throw ParseError("invalid rank character '" + std::string(1, c) + "' in hand '" +
                       std::string(text) + "'");
    }
    if (group_is_dash) {
      throw ParseError("void marker mixed with ranks in hand '" + std::string(text) + "'");
    }
    const Card card(suit, *rank);
    if (hand.Contains(card)) {
      throw ParseError("duplicate rank '" + std::string(1, c) + "' in hand '" +
                       std::string(text) + "'");
    }
    hand.Add(card);
    group_has_ranks = true;
  }
  if (group != kNumSuits - 1) {
    throw ParseError("hand '" + std::string(text) + "' must have 4 suit groups");
  }
  return hand;
}

std::string FormatRanks(RankMask ranks) {
  if (ranks == 0) return "-";
  std::string out;
  for (int r = kNumRanks - 1; r >= 0; --r) {
    if ((ranks >> r) & 1) out.push_back(RankChar(static_cast<Rank>(r)));
  }
  return out;
}

std::string FormatHand(Hand hand) {
  std::string out;
  for (int i = 0; i < kNumSuits; ++i) {
    if (i > 0) out.push_back('.');
    RankMask ranks = hand.Ranks(kSuitsDescending[i]);
    if (ranks != 0) out += FormatRanks(ranks);
  }
  return out;
}

int Hcp(RankMask ranks) {
  int points = 0;
  if (ranks & (1u << RankIndex(Rank::kAce))) points += 4;
  if (ranks & (1u << RankIndex(Rank::kKing))) points += 3;
  if (ranks & (1u << RankIndex(Rank::kQueen))) points += 2;
  if (ranks & (1u << RankIndex(Rank::kJack))) points += 1;
  return points;
}

int Hcp(Hand cards) {
  int points = 0;
  for (Suit s : kSuitsDescending) points += Hcp(cards.Ranks(s));
  return points;
}

}  // namespace leadinf
