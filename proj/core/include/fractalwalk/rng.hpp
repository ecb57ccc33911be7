#pragma once

#include <cstdint>

namespace fractalwalk {

/// Keyed counter-style generator (splitmix64 finalizer over an additive
/// counter).  Each (seed, trial, stream) triple opens an independent
/// substream, so simulations are reproducible regardless of how trials are
/// distributed over threads.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0)
      : state_(mix(seed + kGamma * (trial + 1) + kStreamSalt * (stream + 1))) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  /// One fair bit, consuming buffered words 64 bits at a time.
  bool next_bit() {
    if (bits_left_ == 0) {
      word_ = next_u64();
      bits_left_ = 64;
    }
    const bool bit = (word_ & 1u) != 0;
    word_ >>= 1;
    --bits_left_;
    return bit;
  }

  /// Uniform double in [0, 1).
  double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::uint64_t word_ = 0;
  int bits_left_ = 0;
};

/// Seed used by the command-line tool when none is given.
inline constexpr std::uint64_t kDefaultSeed = 123456789;

}  // namespace fractalwalk
