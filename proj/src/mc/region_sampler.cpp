#include "zgap/mc/region_sampler.hpp"

#include <stdexcept>

namespace zgap::mc {

bool RegionPoint::in_region() const {
  auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  return unit(x) && unit(x1) && unit(x2) && unit(x3) && unit(x4) && x + x1 + x2 <= 1.0 &&
         x + x3 + x4 <= 1.0;
}

RegionPoint sample_region(Stream& stream, std::uint64_t& proposals) {
  // Expected 20 proposals; the cap is unreachable for a working generator.
  constexpr int kMaxProposals = 1 << 20;
  for (int attempt = 0; attempt < kMaxProposals; ++attempt) {
    ++proposals;
    RegionPoint p;
    p.x = stream.uniform();
    p.x1 = stream.uniform();
    p.x2 = stream.uniform();
    if (p.x + p.x1 + p.x2 > 1.0) continue;
    p.x3 = stream.uniform();
    p.x4 = stream.uniform();
    if (p.x + p.x3 + p.x4 > 1.0) continue;
    return p;
  }
  throw std::runtime_error("region sampler exhausted its proposal cap");
}

RegionPoint sample_region(Stream& stream) {
  std::uint64_t proposals = 0;
  return sample_region(stream, proposals);
}

}  // namespace zgap::mc
