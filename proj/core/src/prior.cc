#include "leadinf/prior.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "leadinf/errors.h"

namespace leadinf {
namespace {

std::size_t IndexOf(const std::vector<Holding>& holdings, RankMask ranks) {
  for (std::size_t i = 0; i < holdings.size(); ++i) {
    if (holdings[i].ranks == ranks) return i;
  }
  return holdings.size();
}

}  // namespace

HandVariablePrior::HandVariablePrior(Suit suit, RankMask hidden, std::vector<Rational> weights)
    : suit_(suit), hidden_(hidden), holdings_(EnumerateHoldings(suit, hidden)),
      weights_(std::move(weights)) {
  if (weights_.size() != holdings_.size()) {
    throw std::invalid_argument("prior needs " + std::to_string(holdings_.size()) +
                                " weights, got " + std::to_string(weights_.size()));
  }
  Rational total = 0;
  for (const Rational& w : weights_) {
    if (w < 0) throw std::invalid_argument("negative prior weight");
    total += w;
  }
  if (total == 0) throw std::invalid_argument("prior weights sum to zero");
  if (total != 1) {
    for (Rational& w : weights_) w /= total;
  }
}

Rational HandVariablePrior::Weight(Holding h) const {
  if (h.suit != suit_ || (h.ranks & ~hidden_) != 0) return 0;
  return weights_[IndexOf(holdings_, h.ranks)];
}

Rational HandVariablePrior::Marginal(Card card) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < holdings_.size(); ++i) {
    if (holdings_[i].Contains(card)) sum += weights_[i];
  }
  return sum;
}

Rational HoldingPrior(int n, int k) {
  if (n < 0 || n > kHandSize || k < 0 || k > n) {
    throw std::out_of_range("HoldingPrior: need 0 <= k <= n <= 13, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
  return Rational(Binom(kHiddenCards - n, kHandSize - k), Binom(kHiddenCards, kHandSize));
}

HandVariablePrior PriorDistribution(const DealView& dv, Suit s) {
  const RankMask hidden = dv.HiddenRanks(s);
  const int n = std::popcount(hidden);
  // The weight depends only on |h|, so compute each size once.
  std::vector<Rational> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(HoldingPrior(n, k));
  std::vector<Rational> weights;
  for (const Holding& h : EnumerateHoldings(s, hidden)) weights.push_back(by_size[h.size()]);
  return HandVariablePrior(s, hidden, std::move(weights));
}

HandVariablePrior ParseExternalPrior(std::string_view text, const DealView& dv, Suit s) {
  const RankMask hidden = dv.HiddenRanks(s);
  const int n = std::popcount(hidden);
  const std::vector<Holding> holdings = EnumerateHoldings(s, hidden);
  std::vector<Rational> weights(holdings.size());
  std::vector<bool> seen(holdings.size(), false);

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "prior line " + std::to_string(line_no) + ": ";
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::string ranks_text, weight_text, extra;
    if (!(fields >> ranks_text)) continue;  // blank or comment
    if (!(fields >> weight_text) || (fields >> extra)) {
      throw ParseError(where + "expected '<holding> <weight>'");
    }
    RankMask ranks = 0;
    if (ranks_text != "-") {
      for (char c : ranks_text) {
        const auto rank = RankFromChar(c);
        if (!rank) throw ParseError(where + "unknown rank '" + std::string(1, c) + "'");
        const RankMask bit = static_cast<RankMask>(1u << RankIndex(*rank));
        if (ranks & bit) throw ParseError(where + "repeated rank '" + std::string(1, c) + "'");
        if (!(hidden & bit)) {
          throw ParseError(where + "rank '" + std::string(1, c) + "' is not hidden in suit " +
                           std::string(1, SuitChar(s)));
        }
        ranks |= bit;
      }
    }
    const int k = std::popcount(ranks);
    if (k > kHandSize || kHandSize - k > kHiddenCards - n) {
      throw ParseError(where + "infeasible holding " + FormatRanks(ranks));
    }
    const std::size_t index = IndexOf(holdings, ranks);
    if (seen[index]) throw ParseError(where + "duplicate holding " + FormatRanks(ranks));
    seen[index] = true;
    weights[index] = ParseDecimal(weight_text);
  }

  Rational total = 0;
  for (const Rational& w : weights) total += w;
  if (total == 0) throw ParseError("prior file has zero total weight");
  return HandVariablePrior(s, hidden, std::move(weights));
}

HandVariablePrior LoadExternalPrior(const std::filesystem::path& file, const DealView& dv, Suit s) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open prior file " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseExternalPrior(buffer.str(), dv, s);
}

}  // namespace leadinf
