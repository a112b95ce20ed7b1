#include "leadinf/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "combinations.h"
#include "leadinf/errors.h"
#include "leadinf/random.h"

namespace leadinf {
namespace {

constexpr std::uint64_t kMcBlock = 1u << 16;

std::size_t CardSlot(const std::vector<Card>& cards, Card card) {
  const auto it = std::lower_bound(cards.begin(), cards.end(), card);
  if (it == cards.end() || *it != card) {
    throw std::out_of_range("card " + card.Code() + " is not hidden");
  }
  return static_cast<std::size_t>(it - cards.begin());
}

}  // namespace

Rational OracleReport::Posterior(Card card) const {
  const std::size_t slot = CardSlot(hidden_cards, card);
  if (consistent == 0) throw std::domain_error("oracle report has no consistent hands");
  return Rational(card_counts[slot], consistent);
}

OracleReport OracleCount(const DealView& dv, const HandPredicate& keep, int threads) {
  OracleReport report;
  report.hidden_cards = dv.hidden().Cards();
  const int m = static_cast<int>(report.hidden_cards.size());
  const std::uint64_t total = Binom64(m, kHandSize);
  const internal::SubsetToHand to_hand(report.hidden_cards);

  struct Tally {
    std::uint64_t consistent = 0;
    std::array<std::uint64_t, kHiddenCards> cards{};
  };
  const int workers = internal::ResolveThreads(threads);
  std::vector<Tally> tallies(workers);
  internal::ParallelRanges(total, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
    Tally local;
    internal::ForEachCombination(m, kHandSize, begin, end, [&](std::uint32_t subset) {
      if (!keep(to_hand(subset))) return;
      ++local.consistent;
      for (std::uint32_t b = subset; b != 0; b &= b - 1) ++local.cards[std::countr_zero(b)];
    });
    tallies[w] = local;
  });

  std::array<std::uint64_t, kHiddenCards> sums{};
  std::uint64_t consistent = 0;
  for (const Tally& t : tallies) {
    consistent += t.consistent;
    for (int i = 0; i < m; ++i) sums[i] += t.cards[i];
  }
  report.consistent = consistent;
  report.total = total;
  for (int i = 0; i < m; ++i) report.card_counts.emplace_back(sums[i]);
  return report;
}

OracleReport OraclePosterior(const DealView& dv, const Evidence& ev, const RuleSet& rules,
                             int threads) {
  ValidateEvidence(dv, ev);
  const Strain strain = dv.strain();
  OracleReport report = OracleCount(
      dv, [&](Hand leader) { return rules.LeadOfHand(leader, strain) == ev.lead; }, threads);
  if (report.consistent == 0) {
    throw ZeroEvidence("no leader hand leads " + ev.lead.Code() + " under rules '" +
                       rules.name() + "'");
  }
  return report;
}

double McReport::Estimate(Card card) const {
  const std::size_t slot = CardSlot(hidden_cards, card);
  return static_cast<double>(card_hits[slot]) / static_cast<double>(accepted);
}

double McReport::StdError(Card card) const {
  const double p = Estimate(card);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(accepted));
}

McReport McPosterior(const DealView& dv, const Evidence& ev, const RuleSet& rules,
                     std::uint64_t samples, std::uint64_t seed, int threads) {
  ValidateEvidence(dv, ev);
  if (samples == 0) throw std::invalid_argument("McPosterior needs samples >= 1");
  McReport report;
  report.hidden_cards = dv.hidden().Cards();
  report.samples = samples;
  const std::size_t m = report.hidden_cards.size();
  const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;

  struct Tally {
    std::uint64_t accepted = 0;
    std::array<std::uint64_t, kHiddenCards> cards{};
  };
  std::vector<Tally> per_block(blocks);
  internal::ParallelRanges(blocks, threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    // Shuffle slot indices rather than cards so hits land in report order.
    std::array<std::uint8_t, kHiddenCards> slots{};
    for (std::uint64_t block = begin; block < end; ++block) {
      for (std::size_t i = 0; i < m; ++i) slots[i] = static_cast<std::uint8_t>(i);
      Rng rng(DeriveSeed(seed, block));
      Tally& tally = per_block[block];
      const std::uint64_t first = block * kMcBlock;
      const std::uint64_t last = std::min(samples, first + kMcBlock);
      for (std::uint64_t s = first; s < last; ++s) {
        rng.PartialShuffle(std::span<std::uint8_t>(slots.data(), m), kHandSize);
        Hand leader;
        for (int j = 0; j < kHandSize; ++j) leader.Add(report.hidden_cards[slots[j]]);
        if (rules.LeadOfHand(leader, dv.strain()) != ev.lead) continue;
        ++tally.accepted;
        for (int j = 0; j < kHandSize; ++j) ++tally.cards[slots[j]];
      }
    }
  });

  report.card_hits.assign(m, 0);
  for (const Tally& t : per_block) {
    report.accepted += t.accepted;
    for (std::size_t i = 0; i < m; ++i) report.card_hits[i] += t.cards[i];
  }
  if (report.accepted == 0) {
    throw NoAcceptedSamples("no sampled leader hand led " + ev.lead.Code() + " in " +
                            std::to_string(samples) + " samples");
  }
  return report;
}

std::vector<DealView> SampleDeals(std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("SampleDeals needs count >= 1");
  Rng rng(seed);
  std::vector<DealView> deals;
  deals.reserve(count);
  std::vector<Card> deck;
  for (int i = 0; i < count; ++i) {
    deck.clear();
    for (int c = 0; c < kNumCards; ++c) deck.push_back(Card::FromIndex(c));
    rng.PartialShuffle(std::span<Card>(deck), 2 * kHandSize);
    Hand declarer, dummy;
    for (int c = 0; c < kHandSize; ++c) {
      declarer.Add(deck[c]);
      dummy.Add(deck[c + kHandSize]);
    }
    const auto strain = static_cast<Strain>(rng.Below(5));
    deals.emplace_back(declarer, dummy, strain);
  }
  return deals;
}

}  // namespace leadinf
