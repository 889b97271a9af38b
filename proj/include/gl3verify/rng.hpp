#pragma once

// Counter-based splittable pseudorandom generator.
//
// Verification reports must be byte-identical for a fixed (suite, seed,
// config, version) tuple, and each case must be reproducible in isolation.
// A counter-based design gives both properties for free: the k-th draw of
// stream s under seed x is a pure function mix(key(x, s) + k * GAMMA), so
// per-case sub-streams can be opened at any time without consuming state
// from their parent. The mixer is the SplitMix64 finalizer (Steele,
// Lea & Flood, OOPSLA 2014), a bijection on 64-bit words with full
// avalanche; GAMMA is the golden-ratio increment 2^64/phi.
//
// Everything is integer arithmetic on uint64, so sequences are identical
// across platforms and compilers.

#include <cstdint>

namespace gl3verify {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(detail::mix64(seed + detail::kGolden * (stream + 1))) {}

  // Child generator for an independent sub-stream (e.g. one per case index).
  // Derivation depends only on (key, stream), not on how many values the
  // parent has produced.
  CounterRng split(std::uint64_t stream) const { return CounterRng(key_, stream); }

  std::uint64_t next_u64() {
    ++counter_;
    return detail::mix64(key_ + counter_ * detail::kGolden);
  }

  // Uniform in [0, 1) with 53 random bits (double mantissa width).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double a, double b) { return a + (b - a) * next_unit(); }

  // Uniform integer in [0, n) via 128-bit multiply (Lemire reduction without
  // the rejection step; the ~2^-53 bias is irrelevant for test sampling and
  // keeps the draw count deterministic).
  std::int64_t next_below(std::int64_t n) {
    using u128 = unsigned __int128;
    u128 wide = static_cast<u128>(next_u64()) * static_cast<u128>(n);
    return static_cast<std::int64_t>(wide >> 64);
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t next_range(std::int64_t lo, std::int64_t hi) {
    return lo + next_below(hi - lo + 1);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace gl3verify
