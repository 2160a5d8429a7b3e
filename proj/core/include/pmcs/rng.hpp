#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

// Deterministic random number generation.
//
// Every random draw in the library goes through the generators in this file,
// never through std::random, because the standard distributions are not
// bit-reproducible across toolchains. The algorithms are pinned here:
//
//   splitmix64    - seeding / stream derivation (Steele, Lea, Flood 2014)
//   xoshiro256++  - the stream generator (Blackman, Vigna 2019)
//
// and distributions (uniform integers, Fisher-Yates shuffles, Box-Muller
// gaussians) are implemented below on top of next_u64(). Golden tests in
// tests/test_rng.cpp freeze known outputs so an accidental change to any of
// this is caught. See pmcs::kPrngId in version.hpp.

namespace pmcs::rng {

inline constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t hash64(std::uint64_t x) {
  std::uint64_t s = x;
  return splitmix64_next(s);
}

// Maps (seed, tag, index) to an independent substream seed. Tags keep the
// different consumers (row selection, column permutation, per-filter bits,
// per-frame dark noise, ...) decorrelated; index gives per-item streams whose
// draws do not depend on processing order.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                           std::uint64_t index = 0) {
  return hash64(hash64(hash64(seed) ^ tag) ^ index);
}

// Stream tags. Values are part of the reproducibility contract.
inline constexpr std::uint64_t kTagRowSelection = 1;
inline constexpr std::uint64_t kTagColumnPermutation = 2;
inline constexpr std::uint64_t kTagBernoulliRow = 3;
inline constexpr std::uint64_t kTagDarkNoise = 4;
inline constexpr std::uint64_t kTagPlanSeed = 5;
inline constexpr std::uint64_t kTagAcquireSeed = 6;
inline constexpr std::uint64_t kTagBenchPlan = 7;
inline constexpr std::uint64_t kTagBenchAcquire = 8;
inline constexpr std::uint64_t kTagTest = 100;

class Stream {
 public:
  explicit Stream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, bound); bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = next_u64();
    while (x < reject_below) x = next_u64();
    return x % bound;
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));  // log(1-u1), u1 < 1
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  double next_gaussian(double mean, double stddev) { return mean + stddev * next_gaussian(); }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(T* data, std::uint64_t count) {
    for (std::uint64_t i = count; i > 1; --i) {
      const std::uint64_t j = next_below(i);
      T tmp = data[i - 1];
      data[i - 1] = data[j];
      data[j] = tmp;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
  double cached_ = 0.0;
  bool have_cached_ = false;
};

inline Stream derive_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index = 0) {
  return Stream(derive_seed(seed, tag, index));
}

}  // namespace pmcs::rng
