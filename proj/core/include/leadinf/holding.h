#ifndef LEADINF_HOLDING_H_
#define LEADINF_HOLDING_H_

#include <bit>
#include <vector>

#include "leadinf/card.h"
#include "leadinf/hand.h"

namespace leadinf {

// The leader's cards in one suit: the value space of the hand variable.
struct Holding {
  Suit suit = Suit::kSpades;
  RankMask ranks = 0;

  int size() const { return std::popcount(ranks); }
  bool empty() const { return ranks == 0; }
  bool Contains(Card c) const { return c.suit() == suit && ((ranks >> RankIndex(c.rank())) & 1); }
  Hand AsHand() const { return SuitHand(suit, ranks); }

  friend bool operator==(const Holding&, const Holding&) = default;
};

// All 2^n subsets of `hidden`, ordered by size and then lexicographically by
// descending rank: for hidden {K,3} this is [-, K, 3, K3].
std::vector<Holding> EnumerateHoldings(Suit suit, RankMask hidden);

}  // namespace leadinf

#endif  // LEADINF_HOLDING_H_
