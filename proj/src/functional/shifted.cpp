#include "zgap/functional/shifted.hpp"

#include <stdexcept>

namespace zgap::functional {

mc::McEstimate shifted_c(const AmplifierConfig& config, std::span<const double> b,
                         const Shifts& shifts, std::uint64_t n, std::uint64_t seed,
                         unsigned threads) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
  const IntegrandKernel kernel(config, b);
  return mc::region_estimate(
      [&](const mc::RegionPoint& p, mc::Stream&) { return kernel.shifted(p, shifts); }, n, seed,
      threads);
}

}  // namespace zgap::functional
