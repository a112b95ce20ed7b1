#include <benchmark/benchmark.h>

#include "leadinf/leadinf.h"

namespace leadinf {
namespace {

// Notrump deal whose n highest spades are hidden; other hidden cards are
// the high ones of the remaining suits.
DealView DealWithHiddenSpades(int n) {
  Hand visible;
  for (int r = 0; r < kNumRanks - n; ++r) visible.Add(Card(Suit::kSpades, static_cast<Rank>(r)));
  for (int r = 0; visible.size() < 2 * kHandSize; ++r) {
    for (Suit s : {Suit::kClubs, Suit::kDiamonds, Suit::kHearts}) {
      if (visible.size() < 2 * kHandSize) visible.Add(Card(s, static_cast<Rank>(r)));
    }
  }
  Hand declarer, dummy;
  const std::vector<Card> cards = visible.Cards();
  for (std::size_t i = 0; i < cards.size(); ++i) (i % 2 == 0 ? declarer : dummy).Add(cards[i]);
  return DealView(declarer, dummy, Strain::kNoTrump);
}

void RunPosterior(benchmark::State& state, const LikelihoodMode& mode) {
  const int n = static_cast<int>(state.range(0));
  const DealView dv = DealWithHiddenSpades(n);
  const HandVariablePrior prior = PriorDistribution(dv, Suit::kSpades);
  const Evidence ev{WithinSuitSelect({Suit::kSpades, dv.HiddenRanks(Suit::kSpades)})};
  const BuiltinRules rules;
  PosteriorOptions options;
  options.on_zero = ZeroEvidencePolicy::kPossessionOnly;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Posterior(dv, ev, rules, prior, mode, options));
  }
  state.counters["holdings"] = static_cast<double>(prior.holdings().size());
}

void BM_WithinSuitPosterior(benchmark::State& state) {
  RunPosterior(state, LikelihoodMode::WithinSuit());
}
BENCHMARK(BM_WithinSuitPosterior)->DenseRange(1, 13)->Unit(benchmark::kMicrosecond);

void BM_FullExactPosterior(benchmark::State& state) {
  RunPosterior(state, LikelihoodMode::FullExact());
}
BENCHMARK(BM_FullExactPosterior)->Arg(5)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_MonteCarloPosterior(benchmark::State& state) {
  RunPosterior(state, LikelihoodMode::MonteCarlo(2000, 1));
}
BENCHMARK(BM_MonteCarloPosterior)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_WithinSuitSelect(benchmark::State& state) {
  RankMask m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(WithinSuitSelect({Suit::kHearts, m}));
    m = m == kAllRanks ? 1 : m + 1;
  }
}
BENCHMARK(BM_WithinSuitSelect);

void BM_OracleEnumeration(benchmark::State& state) {
  const DealView dv = DealWithHiddenSpades(5);
  const Evidence ev{WithinSuitSelect({Suit::kSpades, dv.HiddenRanks(Suit::kSpades)})};
  const ForcedSuitRules rules(Suit::kSpades);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OraclePosterior(dv, ev, rules, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_OracleEnumeration)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
}  // namespace leadinf

BENCHMARK_MAIN();
