#include <random>
#include <set>

#include <gtest/gtest.h>

#include "leadinf/card.h"
#include "leadinf/deal_view.h"
#include "leadinf/errors.h"
#include "leadinf/hand.h"

namespace leadinf {
namespace {

TEST(CardTest, CodecRoundTripsAllCards) {
  std::set<std::string> codes;
  for (int i = 0; i < kNumCards; ++i) {
    const Card card = Card::FromIndex(i);
    EXPECT_EQ(Card::FromCode(card.Code()), card);
    codes.insert(card.Code());
  }
  EXPECT_EQ(codes.size(), 52u);
}

TEST(CardTest, ParsesCodes) {
  EXPECT_EQ(Card::FromCode("SK"), Card(Suit::kSpades, Rank::kKing));
  EXPECT_EQ(Card::FromCode("HT"), Card(Suit::kHearts, Rank::kTen));
  EXPECT_THROW(Card::FromCode("SX"), ParseError);
  EXPECT_THROW(Card::FromCode("XK"), ParseError);
  EXPECT_THROW(Card::FromCode("S"), ParseError);
  EXPECT_THROW(Card::FromCode("S10"), ParseError);
}

TEST(CardTest, OrderIsSuitThenRank) {
  EXPECT_GT(Card::FromCode("S2"), Card::FromCode("HA"));
  EXPECT_GT(Card::FromCode("HA"), Card::FromCode("HK"));
  EXPECT_GT(Card::FromCode("D2"), Card::FromCode("CA"));
  for (int i = 0; i + 1 < kNumCards; ++i) {
    EXPECT_LT(Card::FromIndex(i), Card::FromIndex(i + 1));
  }
}

TEST(CardTest, Strains) {
  EXPECT_EQ(StrainFromString("NT"), Strain::kNoTrump);
  EXPECT_EQ(StrainFromString("H"), Strain::kHearts);
  EXPECT_EQ(StrainToString(Strain::kClubs), "C");
  EXPECT_EQ(TrumpSuit(Strain::kNoTrump), std::nullopt);
  EXPECT_EQ(TrumpSuit(Strain::kSpades), Suit::kSpades);
  EXPECT_THROW(StrainFromString("X"), ParseError);
}

TEST(HandTest, ParsesSuitGroups) {
  const Hand hand = ParseHand("AKQ2.T98.543.J76");
  EXPECT_EQ(hand.size(), 13);
  EXPECT_EQ(FormatRanks(hand.Ranks(Suit::kSpades)), "AKQ2");
  EXPECT_EQ(hand.Length(Suit::kHearts), 3);
  EXPECT_TRUE(hand.Contains(Card::FromCode("CJ")));
}

TEST(HandTest, AllSpades) {
  const Hand hand = ParseHand("AKQJT98765432...");
  EXPECT_EQ(hand.size(), 13);
  EXPECT_EQ(hand.Length(Suit::kSpades), 13);
  EXPECT_EQ(FormatHand(hand), "AKQJT98765432...");
}

TEST(HandTest, DashMeansVoid) {
  EXPECT_EQ(ParseHand("AK.-.Q.-"), ParseHand("AK..Q."));
  EXPECT_EQ(FormatHand(ParseHand("2K.-.Q.-")), "K2..Q.");
}

TEST(HandTest, RejectsMalformedText) {
  EXPECT_THROW(ParseHand("AA2.."), ParseError);
  EXPECT_THROW(ParseHand("AX2..."), ParseError);
  EXPECT_THROW(ParseHand("AK.Q.J"), ParseError);
  EXPECT_THROW(ParseHand("AK.Q.J.T.9"), ParseError);
  EXPECT_THROW(ParseHand("A-K..."), ParseError);
  EXPECT_THROW(ParseHand("--..."), ParseError);
}

TEST(HandTest, FormatThenParseRoundTripsRandomHands) {
  std::mt19937_64 gen(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const Hand hand(gen() & Hand::FullDeck().mask());
    EXPECT_EQ(ParseHand(FormatHand(hand)), hand);
  }
}

TEST(HandTest, Hcp) {
  EXPECT_EQ(Hcp(ParseHand("AK...")), 7);
  EXPECT_EQ(Hcp(Hand()), 0);
  EXPECT_EQ(Hcp(Hand::FullDeck()), 40);
}

TEST(DealViewTest, HiddenSetHas26Cards) {
  const DealView dv(ParseHand("AKQ2.T98.543.J76"), ParseHand("JT98.AKQ.AKQ.AK2"),
                    Strain::kNoTrump);
  EXPECT_EQ(dv.hidden().size(), 26);
  EXPECT_EQ(dv.HiddenCount(Suit::kSpades), 5);
  int total = 0;
  for (Suit s : kSuitsDescending) total += dv.HiddenCount(s);
  EXPECT_EQ(total, 26);
}

TEST(DealViewTest, RejectsBadHands) {
  const Hand a = ParseHand("AKQ2.T98.543.J76");
  EXPECT_THROW(DealView(a, ParseHand("KJT9.AKQ.AKQ.AK2"), Strain::kNoTrump), InvalidDeal);
  EXPECT_THROW(DealView(a, ParseHand("JT9.AKQ.AKQ.AK2"), Strain::kNoTrump), InvalidDeal);
  EXPECT_THROW(DealView(ParseHand("AKQ..."), a, Strain::kNoTrump), InvalidDeal);
}

TEST(DealViewTest, EveryCardInExactlyOnePlace) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> deck(52);
    for (int i = 0; i < 52; ++i) deck[i] = i;
    std::shuffle(deck.begin(), deck.end(), gen);
    Hand declarer, dummy;
    for (int i = 0; i < 13; ++i) {
      declarer.Add(Card::FromIndex(deck[i]));
      dummy.Add(Card::FromIndex(deck[13 + i]));
    }
    const DealView dv(declarer, dummy, Strain::kHearts);
    for (int i = 0; i < kNumCards; ++i) {
      const Card c = Card::FromIndex(i);
      EXPECT_EQ(dv.declarer().Contains(c) + dv.dummy().Contains(c) + dv.IsHidden(c), 1);
    }
  }
}

TEST(DealViewTest, DealTextRoundTrip) {
  const std::string text =
      "# a comment\n"
      "declarer: AQJ8.AKQ2.AKQ.AK\n"
      "dummy:6542.JT9.JT9.QJT\n"
      "\n"
      "strain: NT\n";
  const DealView dv = ParseDealText(text);
  EXPECT_EQ(dv.HiddenCount(Suit::kSpades), 5);
  EXPECT_EQ(FormatDealText(dv),
            "declarer: AQJ8.AKQ2.AKQ.AK\ndummy: 6542.JT9.JT9.QJT\nstrain: NT\n");
  EXPECT_THROW(ParseDealText("declarer: AQJ8.AKQ2.AKQ.AK\n"), ParseError);
  EXPECT_THROW(ParseDealText("north: AQJ8.AKQ2.AKQ.AK\n"), ParseError);
}

}  // namespace
}  // namespace leadinf
