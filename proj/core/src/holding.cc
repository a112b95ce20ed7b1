#include "leadinf/holding.h"

#include <algorithm>

namespace leadinf {

std::vector<Holding> EnumerateHoldings(Suit suit, RankMask hidden) {
  std::vector<Holding> out;
  out.reserve(std::size_t{1} << std::popcount(hidden));
  // Walk every submask of `hidden`, including the empty one.
  RankMask sub = hidden;
  while (true) {
    out.push_back({suit, sub});
    if (sub == 0) break;
    sub = static_cast<RankMask>((sub - 1) & hidden);
  }
  // Among equal-size holdings, the one owning the highest differing rank is
  // also the numerically larger mask.
  std::sort(out.begin(), out.end(), [](const Holding& a, const Holding& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.ranks > b.ranks;
  });
  return out;
}

}  // namespace leadinf
