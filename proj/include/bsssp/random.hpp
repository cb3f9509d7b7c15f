#pragma once

// SplitMix64 (Steele, Lea, Flood 2014). Used for every random decision in the
// library so that runs are reproducible across platforms and standard
// libraries: no std:: distributions are involved anywhere.

#include <cstdint>
#include <limits>

namespace bsssp {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += kGoldenGamma;
    return splitmix64_mix(state_);
  }

  // Uniform integer in [0, bound), bound > 0 (multiply-high reduction).
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * bound) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Independent generator for a sub-task (e.g. one generator attempt).
  constexpr SplitMix64 split() noexcept { return SplitMix64((*this)()); }

 private:
  std::uint64_t state_;
};

// The i-th output of SplitMix64(seed), computed in O(1). This is the
// per-vertex stream used for sampling: vertex v reads draw(seed, v).
constexpr std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64_mix(seed + (index + 1) * kGoldenGamma);
}

// True with probability 1/k (up to a 2^-64 rounding of the cut point).
constexpr bool one_in(std::uint64_t draw, std::uint64_t k) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(draw) * k) >> 64) == 0;
}

}  // namespace bsssp
