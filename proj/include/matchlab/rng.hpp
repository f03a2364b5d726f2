#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace matchlab {

// Project-wide PRNG contract, kept deliberately small so that experiments are
// bit-reproducible and easy to port:
//
//   * state expansion / mixing: SplitMix64,
//   * stream generator: xoshiro256**, seeded with four SplitMix64 outputs,
//   * per-trial streams: Rng::for_trial(seed, t) = Rng(splitmix64(seed ^ t)),
//   * uniform doubles take the top 53 bits,
//   * bounded integers use unbiased modulo rejection,
//   * permutations are sampled by Fisher-Yates from the identity.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed ^ trial;
    return Rng(splitmix64_next(s));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
};

// items[r] = value placed at position r after a Fisher-Yates pass over 0..n-1.
inline std::vector<int> random_index_order(int n, Rng& rng) {
  std::vector<int> items(static_cast<std::size_t>(n));
  std::iota(items.begin(), items.end(), 0);
  rng.shuffle(items);
  return items;
}

}  // namespace matchlab
