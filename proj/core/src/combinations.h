#ifndef LEADINF_SRC_COMBINATIONS_H_
#define LEADINF_SRC_COMBINATIONS_H_

// Internal helpers for enumerating r-subsets of a small card list.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "leadinf/exact.h"
#include "leadinf/hand.h"

namespace leadinf::internal {

// Maps an m-bit subset mask (m <= 26) of `cards` to a Hand with two 13-bit
// table lookups.
class SubsetToHand {
 public:
  explicit SubsetToHand(const std::vector<Card>& cards) {
    for (std::uint32_t m = 0; m < kTable; ++m) {
      std::uint64_t lo = 0, hi = 0;
      for (int b = 0; b < kBits; ++b) {
        if (!((m >> b) & 1)) continue;
        if (static_cast<std::size_t>(b) < cards.size()) lo |= std::uint64_t{1} << cards[b].index();
        if (static_cast<std::size_t>(b + kBits) < cards.size()) {
          hi |= std::uint64_t{1} << cards[b + kBits].index();
        }
      }
      low_[m] = lo;
      high_[m] = hi;
    }
  }

  Hand operator()(std::uint32_t subset) const {
    return Hand(low_[subset & (kTable - 1)] | high_[subset >> kBits]);
  }

 private:
  static constexpr int kBits = 13;
  static constexpr std::uint32_t kTable = 1u << kBits;
  std::array<std::uint64_t, kTable> low_{};
  std::array<std::uint64_t, kTable> high_{};
};

// The r-subset of {0..m-1} with the given colexicographic rank, as a mask.
// Colex rank order is increasing numeric mask order.
inline std::uint32_t UnrankColex(int m, int r, std::uint64_t rank) {
  std::uint32_t mask = 0;
  int top = m - 1;
  for (int i = r; i >= 1; --i) {
    while (Binom64(top, i) > rank) --top;
    mask |= 1u << top;
    rank -= Binom64(top, i);
    --top;
  }
  return mask;
}

// Gosper's hack: next larger mask with the same popcount.
inline std::uint32_t NextCombination(std::uint32_t x) {
  const std::uint32_t c = x & (0u - x);
  const std::uint32_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls fn(mask) for colex ranks [begin, end) of r-subsets of m items.
template <typename Fn>
void ForEachCombination(int m, int r, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  if (r == 0) {
    fn(std::uint32_t{0});
    return;
  }
  std::uint32_t mask = UnrankColex(m, r, begin);
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(mask);
    if (i + 1 < end) mask = NextCombination(mask);
  }
}

inline int ResolveThreads(int threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, total) into `threads` contiguous ranges and runs
// fn(worker, begin, end) for each, one thread per range. Worker 0 runs on
// the calling thread.
template <typename Fn>
void ParallelRanges(std::uint64_t total, int threads, Fn&& fn) {
  const int workers = static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(ResolveThreads(threads), total)));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  auto bounds = [&](int w) { return total * static_cast<std::uint64_t>(w) / workers; };
  auto run = [&](int w) {
    try {
      fn(w, bounds(w), bounds(w + 1));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  for (int w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace leadinf::internal

#endif  // LEADINF_SRC_COMBINATIONS_H_
