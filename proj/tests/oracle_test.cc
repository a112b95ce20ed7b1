#include <cmath>

#include <gtest/gtest.h>

#include "leadinf/errors.h"
#include "leadinf/oracle.h"
#include "test_oracles.h"

namespace leadinf {
namespace {

using testing::KingTenNineScenario;
using testing::PascalBinom;

// Leads the lowest card of the lowest non-void suit.
class LowestCardRules final : public RuleSet {
 public:
  std::optional<Card> SelectWithinSuit(Holding h) const override {
    if (h.empty()) return std::nullopt;
    return Card(h.suit, static_cast<Rank>(std::countr_zero(static_cast<unsigned>(h.ranks))));
  }
  Suit ChooseSuit(Hand hand, Strain) const override {
    for (int s = 0; s < kNumSuits; ++s) {
      if (hand.Length(static_cast<Suit>(s)) > 0) return static_cast<Suit>(s);
    }
    return Suit::kClubs;
  }
  bool suit_local() const override { return true; }
  std::string name() const override { return "lowest"; }
};

TEST(OracleTest, TotalIsAllSplits) {
  const DealView dv = KingTenNineScenario();
  const OracleReport report = OracleCount(dv, [](Hand) { return true; });
  EXPECT_EQ(report.total, PascalBinom(26, 13));
  EXPECT_EQ(report.consistent, report.total);
  for (Card c : report.hidden_cards) EXPECT_EQ(report.Posterior(c), Rational(1, 2));
}

TEST(OracleTest, AnyLeadAllowedCountsHandsHoldingTheCard) {
  const DealView dv = KingTenNineScenario();
  const Card lead = Card::FromCode("S7");
  const OracleReport report = OracleCount(dv, [&](Hand h) { return h.Contains(lead); });
  EXPECT_EQ(report.consistent, PascalBinom(25, 12));
  ExactCount sum = 0;
  for (const ExactCount& c : report.card_counts) sum += c;
  EXPECT_EQ(sum, report.consistent * 13);
}

TEST(OracleTest, LowestClubClosedForm) {
  // Leading the second-lowest hidden club under "lowest card of the lowest
  // non-void suit": the leader holds that club but not the lowest one, so
  // C(24, 12) hands.
  const DealView dv = KingTenNineScenario();
  const std::vector<Card> clubs = (dv.hidden() & SuitHand(Suit::kClubs, kAllRanks)).Cards();
  ASSERT_GE(clubs.size(), 2u);
  const OracleReport report = OraclePosterior(dv, {clubs[1]}, LowestCardRules());
  EXPECT_EQ(report.consistent, PascalBinom(24, 12));
  EXPECT_EQ(report.Posterior(clubs[0]), 0);
  EXPECT_EQ(report.Posterior(clubs[1]), 1);
  // Any other hidden card: 11 of the remaining 24 slots.
  EXPECT_EQ(report.Posterior(Card::FromCode("SK")), Rational(12, 24));
}

TEST(OracleTest, SumOfMarginalsIsThirteen) {
  const DealView dv = KingTenNineScenario();
  const OracleReport report = OraclePosterior(dv, {Card::FromCode("S7")}, BuiltinRules());
  Rational sum = 0;
  for (Card c : report.hidden_cards) sum += report.Posterior(c);
  EXPECT_EQ(sum, 13);
  EXPECT_LE(report.consistent, report.total);
}

TEST(OracleTest, ForcedSpadeMatchesWithinSuitPosterior) {
  const DealView dv = KingTenNineScenario();
  const Evidence ev{Card::FromCode("SK")};
  const ForcedSuitRules rules(Suit::kSpades);
  const OracleReport oracle = OraclePosterior(dv, ev, rules);
  const BeliefState bs =
      Posterior(dv, ev, rules, PriorDistribution(dv, Suit::kSpades), LikelihoodMode::WithinSuit());
  EXPECT_EQ(oracle.consistent, 1704794);
  for (const CardProbability& cp : bs.led_suit_marginals) {
    EXPECT_EQ(cp.p.exact(), oracle.Posterior(cp.card));
  }
  EXPECT_EQ(oracle.Posterior(Card::FromCode("ST")), Rational(352716, 1704794));
}

TEST(OracleTest, ThreadCountDoesNotChangeReport) {
  const DealView dv = SampleDeals(5, 1).front();
  const std::vector<Card> hidden = dv.hidden().Cards();
  Hand leader;
  for (int i = 0; i < 13; ++i) leader.Add(hidden[2 * i]);
  const Card lead = *BuiltinRules().LeadOfHand(leader, dv.strain());
  const OracleReport one = OraclePosterior(dv, {lead}, BuiltinRules(), 1);
  const OracleReport three = OraclePosterior(dv, {lead}, BuiltinRules(), 3);
  EXPECT_EQ(one, three);
  EXPECT_GT(one.consistent, 0);
}

TEST(OracleTest, Errors) {
  const DealView dv = KingTenNineScenario();
  EXPECT_THROW(OraclePosterior(dv, {Card::FromCode("SA")}, BuiltinRules()), InfeasibleEvidence);
  // The lowest-card rule never leads a spade here: with 8 hidden clubs and
  // 7 hidden diamonds the leader always holds one or the other.
  EXPECT_THROW(OraclePosterior(dv, {Card::FromCode("SK")}, LowestCardRules()), ZeroEvidence);
  // A singleton or doubleton king is never the longest suit.
  EXPECT_THROW(OraclePosterior(dv, {Card::FromCode("SK")}, BuiltinRules()), ZeroEvidence);
  const OracleReport report = OraclePosterior(dv, {Card::FromCode("S7")}, BuiltinRules());
  EXPECT_THROW(report.Posterior(Card::FromCode("SA")), std::out_of_range);
}

TEST(McPosteriorTest, DeterministicUnderSeed) {
  const DealView dv = KingTenNineScenario();
  const Evidence ev{Card::FromCode("S7")};
  const McReport a = McPosterior(dv, ev, BuiltinRules(), 150000, 7, 1);
  const McReport b = McPosterior(dv, ev, BuiltinRules(), 150000, 7, 3);
  EXPECT_EQ(a, b);
  const McReport c = McPosterior(dv, ev, BuiltinRules(), 150000, 8, 1);
  EXPECT_NE(a.card_hits, c.card_hits);
  EXPECT_GT(a.acceptance_rate(), 0.0);
  EXPECT_LT(a.acceptance_rate(), 1.0);
}

TEST(McPosteriorTest, ApproachesOracle) {
  const DealView dv = KingTenNineScenario();
  const Evidence ev{Card::FromCode("S3")};
  const OracleReport oracle = OraclePosterior(dv, ev, BuiltinRules());
  const McReport mc = McPosterior(dv, ev, BuiltinRules(), 400000, 1);
  for (Card c : oracle.hidden_cards) {
    EXPECT_NEAR(mc.Estimate(c), ToDouble(oracle.Posterior(c)), std::max(0.01, 3 * mc.StdError(c)))
        << c.Code();
  }
}

TEST(McPosteriorTest, UnbiasedOverSeeds) {
  const DealView dv = KingTenNineScenario();
  const Evidence ev{Card::FromCode("SK")};
  const Card probe = Card::FromCode("ST");
  const double truth = ToDouble(Rational(352716, 1704794));
  const ForcedSuitRules rules(Suit::kSpades);
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const McReport mc = McPosterior(dv, ev, rules, 20000, seed);
    if (std::abs(mc.Estimate(probe) - truth) < 3 * mc.StdError(probe)) ++within;
  }
  EXPECT_GE(within, 95);
}

TEST(McPosteriorTest, ImpossibleLeadRejectsEverything) {
  const DealView dv = KingTenNineScenario();
  EXPECT_THROW(McPosterior(dv, {Card::FromCode("SK")}, LowestCardRules(), 20000, 1),
               NoAcceptedSamples);
  EXPECT_THROW(McPosterior(dv, {Card::FromCode("SK")}, BuiltinRules(), 0, 1),
               std::invalid_argument);
}

TEST(SampleDealsTest, ValidAndDeterministic) {
  const auto a = SampleDeals(1, 50);
  const auto b = SampleDeals(1, 50);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].hidden().size(), 26);
    EXPECT_EQ(a[i].declarer(), b[i].declarer());
    EXPECT_EQ(a[i].dummy(), b[i].dummy());
    EXPECT_EQ(a[i].strain(), b[i].strain());
  }
  EXPECT_THROW(SampleDeals(1, 0), std::invalid_argument);
}

TEST(SampleDealsTest, HiddenSpadeCountMean) {
  // Hypergeometric: 26 hidden of 52 with 13 spades, mean 6.5 and variance
  // 26 * (1/4) * (3/4) * (26/51).
  const auto deals = SampleDeals(123, 1000);
  double sum = 0;
  for (const DealView& dv : deals) sum += dv.HiddenCount(Suit::kSpades);
  const double mean = sum / deals.size();
  const double sigma = std::sqrt(26.0 * 0.25 * 0.75 * (26.0 / 51.0) / deals.size());
  EXPECT_NEAR(mean, 6.5, 3 * sigma);
}

}  // namespace
}  // namespace leadinf
