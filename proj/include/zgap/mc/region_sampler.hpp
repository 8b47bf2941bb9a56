#pragma once

#include <cstdint>

#include "zgap/mc/rng.hpp"

namespace zgap::mc {

inline constexpr double kRegionVolume = 1.0 / 20.0;

struct RegionPoint {
  double x = 0, x1 = 0, x2 = 0, x3 = 0, x4 = 0;

  bool in_region() const;
};

/// Uniform point of R by rejection from the unit 5-cube. Coordinates are
/// drawn in the order x, x1, x2, x3, x4; x3 and x4 are only drawn once the
/// first constraint holds. `proposals` is incremented per cube proposal.
RegionPoint sample_region(Stream& stream, std::uint64_t& proposals);
RegionPoint sample_region(Stream& stream);

}  // namespace zgap::mc
