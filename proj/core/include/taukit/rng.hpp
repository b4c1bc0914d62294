#pragma once

#include <cstdint>

namespace taukit {

// PCG32 (XSH-RR output, 64-bit LCG state, odd 64-bit increment).
//
// The generator identity is pinned so that sequences are reproducible
// across builds, and so ports to other languages can verify stream
// compatibility or explicitly diverge:
//
//   multiplier   6364136223846793005
//   increment    2 * stream + 1
//   seeding      state = 0; step; state += seed; step
//   output       xorshifted = ((state >> 18) ^ state) >> 27  (old state)
//                rotate xorshifted right by (state >> 59)
//
// First four 32-bit outputs for Pcg32(0) (seed 0, stream 0):
//   0xe4c14788 0x379c6516 0x5c4ab3bb 0x601d23e0
//
// 64-bit draws concatenate two 32-bit outputs, high word first. Unit
// doubles take the top 53 bits of a 64-bit draw plus half an ulp, so
// they lie strictly inside (0,1).
class Pcg32 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ull;

  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : state_(0), inc_((stream << 1) | 1u) {
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() noexcept {
    const std::uint64_t old = state_;
    state_ = old * kMultiplier + inc_;
    const auto xorshifted =
        static_cast<std::uint32_t>(((old >> 18) ^ old) >> 27);
    const auto rot = static_cast<std::uint32_t>(old >> 59);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
  }

  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased draw from [0, bound) by rejection; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

// Stream ids reserved by the library. Sampling (generators) and
// permutation (interval shuffles) never share a stream, so a generated
// sequence and its shuffle are uncorrelated even under the same seed.
inline constexpr std::uint64_t kSampleStream = 0;
inline constexpr std::uint64_t kShuffleStream = 1;

}  // namespace taukit
