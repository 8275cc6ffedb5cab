#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace edgecolor {

inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// SplitMix64 stream. Distinct (seed, stream) pairs give independent sequences,
// and every draw is a pure function of the counter, so results are identical
// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0, uint64_t stream = 0)
      : seed_(seed), stream_(stream), state_(mix64(seed ^ mix64(stream + kGolden))) {}

  uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  uint64_t below(uint64_t bound) {
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<uint64_t>(m);
    if (low < bound) {
      uint64_t threshold = -bound % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  Rng split(uint64_t stream) const { return Rng(seed_, mix64(stream_ * 0x100000001B3ULL + stream + 1)); }

  uint64_t seed() const { return seed_; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  uint64_t seed_;
  uint64_t stream_;
  uint64_t state_;
};

}  // namespace edgecolor
