#include "zgap/mc/rng.hpp"

namespace zgap::mc {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t substream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(substream),
                    static_cast<std::uint32_t>(substream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Stream::Stream(std::uint64_t seed, std::uint64_t substream)
    : engine_(seeded_engine(seed, substream)) {}

}  // namespace zgap::mc
