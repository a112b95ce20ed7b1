#ifndef LEADINF_RANDOM_H_
#define LEADINF_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace leadinf {

// SplitMix64 finalizer; used to derive independent substream seeds from a
// master seed so results do not depend on how work is scheduled.
constexpr std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return MixSeed(MixSeed(seed) ^ MixSeed(stream + 0x632be59bd9b4e019ULL));
}

// std::mt19937_64 is fully specified by the standard; the distributions are
// not, so bounded draws are done here to keep output identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), bound > 0. Lemire's multiply-and-reject.
  std::uint64_t Below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Moves a uniform random k-subset into items[0, k), Fisher-Yates style.
  template <typename T>
  void PartialShuffle(std::span<T> items, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(Below(items.size() - i));
      std::swap(items[i], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace leadinf

#endif  // LEADINF_RANDOM_H_
