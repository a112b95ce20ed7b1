#include "leadinf/inference.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "combinations.h"
#include "leadinf/errors.h"
#include "leadinf/random.h"

namespace leadinf {
namespace {

// Hidden cards outside the holding's suit, ascending.
std::vector<Card> OffSuitHidden(const DealView& dv, Suit s) {
  return (dv.hidden() - SuitHand(s, kAllRanks)).Cards();
}

void CheckHolding(Holding h, const Evidence& ev, const DealView& dv) {
  if (h.suit != ev.lead.suit()) {
    throw InfeasibleEvidence("holding suit " + std::string(1, SuitChar(h.suit)) +
                             " does not match lead " + ev.lead.Code());
  }
  const RankMask hidden = dv.HiddenRanks(h.suit);
  if ((h.ranks & ~hidden) != 0) {
    throw InfeasibleEvidence("holding " + FormatRanks(h.ranks) + " uses visible cards");
  }
  const int off_suit = kHiddenCards - std::popcount(hidden);
  if (kHandSize - h.size() > off_suit) {
    throw InfeasibleEvidence("holding " + FormatRanks(h.ranks) + " cannot be completed to 13");
  }
}

std::uint64_t CountConsistentCompletions(Holding h, const Evidence& ev, const RuleSet& rules,
                                         const DealView& dv, int threads) {
  const std::vector<Card> off = OffSuitHidden(dv, h.suit);
  const int m = static_cast<int>(off.size());
  const int r = kHandSize - h.size();
  const internal::SubsetToHand to_hand(off);
  const Hand base = h.AsHand();
  const Strain strain = dv.strain();
  const int workers = internal::ResolveThreads(threads);
  std::vector<std::uint64_t> counts(workers, 0);
  internal::ParallelRanges(Binom64(m, r), workers,
                           [&](int w, std::uint64_t begin, std::uint64_t end) {
                             std::uint64_t local = 0;
                             internal::ForEachCombination(m, r, begin, end, [&](std::uint32_t c) {
                               if (rules.LeadOfHand(to_hand(c) | base, strain) == ev.lead) ++local;
                             });
                             counts[w] = local;
                           });
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

Probability SampleLikelihood(Holding h, const Evidence& ev, const RuleSet& rules,
                             const DealView& dv, const LikelihoodMode& mode) {
  std::vector<Card> off = OffSuitHidden(dv, h.suit);
  const std::size_t r = static_cast<std::size_t>(kHandSize - h.size());
  Rng rng(DeriveSeed(mode.seed(),
                     static_cast<std::uint64_t>(SuitIndex(h.suit)) << 16 | h.ranks));
  const Hand base = h.AsHand();
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < mode.samples(); ++i) {
    rng.PartialShuffle(std::span<Card>(off), r);
    Hand hand = base;
    for (std::size_t j = 0; j < r; ++j) hand.Add(off[j]);
    if (rules.LeadOfHand(hand, dv.strain()) == ev.lead) ++hits;
  }
  const double n = static_cast<double>(mode.samples());
  const double p = static_cast<double>(hits) / n;
  return Probability::Estimate(p, std::sqrt(p * (1.0 - p) / n));
}

bool HoldingOnlyLikelihood(const BeliefState& bs) {
  return bs.mode.kind() == LikelihoodMode::Kind::kWithinSuit || bs.possession_only ||
         !bs.lead.has_value();
}

// Fills posterior, marginals and z from exact joint weights prior * likelihood.
void FinishExact(BeliefState& bs, const std::vector<Rational>& joint) {
  Rational z = 0;
  for (const Rational& j : joint) z += j;
  bs.z = Probability::Exact(z);
  std::vector<Rational> post(joint.size());
  for (std::size_t i = 0; i < joint.size(); ++i) post[i] = joint[i] / z;

  const RankMask hidden = [&] {
    RankMask m = 0;
    for (const Holding& h : bs.holdings) m |= h.ranks;
    return m;
  }();
  for (int r = kNumRanks - 1; r >= 0; --r) {
    if (!((hidden >> r) & 1)) continue;
    const Card card(bs.suit, static_cast<Rank>(r));
    Rational sum = 0;
    for (std::size_t i = 0; i < post.size(); ++i) {
      if (bs.holdings[i].Contains(card)) sum += post[i];
    }
    bs.led_suit_marginals.push_back({card, Probability::Exact(sum)});
  }
  if (HoldingOnlyLikelihood(bs)) {
    Rational off = 0;
    const int off_count = kHiddenCards - bs.hidden_count;
    for (std::size_t i = 0; i < post.size(); ++i) {
      off += post[i] * Rational(kHandSize - bs.holdings[i].size(), off_count);
    }
    bs.offsuit_marginal = Probability::Exact(off);
  }
  for (Rational& p : post) bs.posterior.push_back(Probability::Exact(std::move(p)));
}

// Estimate path: joint_i = w_i * L_i with independent L_i of variance var_i.
// Standard errors of ratios come from the delta method.
void FinishEstimate(BeliefState& bs, const std::vector<double>& w, const std::vector<double>& lik,
                    const std::vector<double>& var) {
  const std::size_t count = w.size();
  double z = 0.0, z_var = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    z += w[i] * lik[i];
    z_var += w[i] * w[i] * var[i];
  }
  bs.z = Probability::Estimate(z, std::sqrt(z_var));
  std::vector<double> post(count);
  for (std::size_t i = 0; i < count; ++i) post[i] = w[i] * lik[i] / z;

  // SE of sum_{i in S} post_i, given the indicator of S.
  auto ratio_se = [&](auto in_set, double value) {
    double v = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double d = (in_set(i) ? 1.0 : 0.0) - value;
      v += w[i] * w[i] * var[i] * d * d;
    }
    return std::sqrt(v) / z;
  };
  for (std::size_t i = 0; i < count; ++i) {
    bs.posterior.push_back(
        Probability::Estimate(post[i], ratio_se([&](std::size_t j) { return j == i; }, post[i])));
  }
  RankMask hidden = 0;
  for (const Holding& h : bs.holdings) hidden |= h.ranks;
  for (int r = kNumRanks - 1; r >= 0; --r) {
    if (!((hidden >> r) & 1)) continue;
    const Card card(bs.suit, static_cast<Rank>(r));
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      if (bs.holdings[i].Contains(card)) sum += post[i];
    }
    const double se = ratio_se([&](std::size_t j) { return bs.holdings[j].Contains(card); }, sum);
    bs.led_suit_marginals.push_back({card, Probability::Estimate(sum, se)});
  }
}

}  // namespace

LikelihoodMode LikelihoodMode::MonteCarlo(std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("Monte Carlo likelihood needs samples >= 1");
  return LikelihoodMode(Kind::kMonteCarlo, samples, seed);
}

std::string LikelihoodMode::name() const {
  switch (kind_) {
    case Kind::kWithinSuit:
      return "within-suit";
    case Kind::kFullExact:
      return "full";
    case Kind::kMonteCarlo:
      return "mc";
  }
  return "unknown";
}

void ValidateEvidence(const DealView& dv, const Evidence& ev) {
  if (!dv.IsHidden(ev.lead)) {
    throw InfeasibleEvidence("lead " + ev.lead.Code() + " is visible to declarer");
  }
}

std::vector<Holding> EnumerateHoldings(const DealView& dv, Suit s) {
  return EnumerateHoldings(s, dv.HiddenRanks(s));
}

Probability Likelihood(Holding h, const Evidence& ev, const RuleSet& rules, const DealView& dv,
                       const LikelihoodMode& mode, int threads) {
  CheckHolding(h, ev, dv);
  const bool selects_lead = !h.empty() && rules.SelectWithinSuit(h) == ev.lead;
  switch (mode.kind()) {
    case LikelihoodMode::Kind::kWithinSuit:
      return Probability::Exact(selects_lead ? 1 : 0);
    case LikelihoodMode::Kind::kFullExact: {
      if (rules.suit_local() && !selects_lead) return Probability::Exact(0);
      const int off = kHiddenCards - dv.HiddenCount(h.suit);
      const std::uint64_t total = Binom64(off, kHandSize - h.size());
      const std::uint64_t hits = CountConsistentCompletions(h, ev, rules, dv, threads);
      return Probability::Exact(Rational(hits, total));
    }
    case LikelihoodMode::Kind::kMonteCarlo:
      if (rules.suit_local() && !selects_lead) return Probability::Exact(0);
      return SampleLikelihood(h, ev, rules, dv, mode);
  }
  throw std::logic_error("unhandled likelihood mode");
}

BeliefState Posterior(const DealView& dv, const Evidence& ev, const RuleSet& rules,
                      const HandVariablePrior& prior, const LikelihoodMode& mode,
                      const PosteriorOptions& options) {
  ValidateEvidence(dv, ev);
  const Suit s = ev.lead.suit();
  if (prior.suit() != s || prior.hidden_ranks() != dv.HiddenRanks(s)) {
    throw InfeasibleEvidence("prior is not over the hidden cards of the led suit " +
                             std::string(1, SuitChar(s)));
  }

  BeliefState bs;
  bs.suit = s;
  bs.lead = ev.lead;
  bs.mode = mode;
  bs.hidden_count = prior.hidden_count();
  bs.holdings = prior.holdings();
  const std::size_t count = bs.holdings.size();

  std::vector<Probability> lik(count);
  if (mode.kind() == LikelihoodMode::Kind::kMonteCarlo) {
    // Each holding has its own seeded stream, so the split is free.
    internal::ParallelRanges(count, options.threads,
                             [&](int, std::uint64_t begin, std::uint64_t end) {
                               for (std::uint64_t i = begin; i < end; ++i) {
                                 if (prior.weights()[i] == 0) continue;
                                 lik[i] = Likelihood(bs.holdings[i], ev, rules, dv, mode, 1);
                               }
                             });
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      // Completions of a zero-weight holding never contribute.
      if (prior.weights()[i] == 0 && mode.kind() != LikelihoodMode::Kind::kWithinSuit) continue;
      lik[i] = Likelihood(bs.holdings[i], ev, rules, dv, mode, options.threads);
    }
  }

  const bool exact = std::all_of(lik.begin(), lik.end(), [](const Probability& p) {
    return p.is_exact();
  });
  bool zero = true;
  for (std::size_t i = 0; i < count; ++i) {
    if (lik[i].value() > 0 && prior.weights()[i] > 0) zero = false;
  }
  if (zero) {
    if (options.on_zero == ZeroEvidencePolicy::kError) {
      throw ZeroEvidence("no holding is consistent with lead " + ev.lead.Code() + " under rules '" +
                         rules.name() + "'");
    }
    bs.possession_only = true;
    std::vector<Rational> joint(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (bs.holdings[i].Contains(ev.lead)) joint[i] = prior.weights()[i];
    }
    FinishExact(bs, joint);
    return bs;
  }

  if (exact) {
    std::vector<Rational> joint(count);
    for (std::size_t i = 0; i < count; ++i) joint[i] = prior.weights()[i] * lik[i].exact();
    FinishExact(bs, joint);
  } else {
    std::vector<double> w(count), l(count), var(count);
    for (std::size_t i = 0; i < count; ++i) {
      w[i] = ToDouble(prior.weights()[i]);
      l[i] = lik[i].value();
      var[i] = lik[i].std_error() * lik[i].std_error();
    }
    FinishEstimate(bs, w, l, var);
  }
  return bs;
}

BeliefState PriorBelief(const HandVariablePrior& prior) {
  BeliefState bs;
  bs.suit = prior.suit();
  bs.hidden_count = prior.hidden_count();
  bs.holdings = prior.holdings();
  FinishExact(bs, prior.weights());
  return bs;
}

std::vector<MarginalRow> CardMarginals(const BeliefState& bs) {
  std::vector<MarginalRow> rows;
  for (const CardProbability& cp : bs.led_suit_marginals) rows.push_back({cp.card, cp.p});
  std::stable_sort(rows.begin(), rows.end(), [](const MarginalRow& a, const MarginalRow& b) {
    if (a.p.is_exact() && b.p.is_exact()) {
      if (a.p.exact() != b.p.exact()) return a.p.exact() > b.p.exact();
    } else if (a.p.value() != b.p.value()) {
      return a.p.value() > b.p.value();
    }
    return *a.card > *b.card;
  });
  if (bs.offsuit_marginal) rows.push_back({std::nullopt, *bs.offsuit_marginal});
  return rows;
}

}  // namespace leadinf
