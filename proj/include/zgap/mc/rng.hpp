#pragma once

#include <cstdint>
#include <random>

namespace zgap::mc {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// One deterministic substream of the 64-bit Mersenne Twister. Substream k of
/// seed s is initialized through std::seed_seq over the 32-bit halves of
/// (s, k); both algorithms are fully specified by the standard, so the stream
/// is identical on every conforming platform.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t substream);

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zgap::mc
