#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zgap/mc/region_sampler.hpp"
#include "zgap/mc/rng.hpp"

namespace zgap::mc {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

/// Samples per substream. Chunk k always uses substream k, so the estimate
/// depends only on (seed, n) and never on the worker count.
inline constexpr std::uint64_t kChunkSize = 1u << 15;

namespace detail {

struct ChunkMoments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

inline void combine(ChunkMoments& acc, const ChunkMoments& c) {
  if (c.count == 0) return;
  const double total = static_cast<double>(acc.count + c.count);
  const double delta = c.mean - acc.mean;
  acc.mean += delta * static_cast<double>(c.count) / total;
  acc.m2 += c.m2 + delta * delta * static_cast<double>(acc.count) * static_cast<double>(c.count) /
                       total;
  acc.count += c.count;
}

}  // namespace detail

/// Region integral of `integrand` by uniform sampling:
///   volume(R) * mean(f), stderr = volume(R) * sd(f) / sqrt(n).
/// `integrand(point, stream)` may draw extra variates from the stream.
template <class Integrand>
McEstimate region_estimate(const Integrand& integrand, std::uint64_t n, std::uint64_t seed,
                           unsigned threads = 1) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
  const std::uint64_t chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<detail::ChunkMoments> moments(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      Stream stream(seed, c);
      const std::uint64_t count = std::min(kChunkSize, n - c * kChunkSize);
      detail::ChunkMoments m;
      for (std::uint64_t i = 0; i < count; ++i) {
        const RegionPoint p = sample_region(stream);
        const double f = integrand(p, stream);
        ++m.count;
        const double delta = f - m.mean;
        m.mean += delta / static_cast<double>(m.count);
        m.m2 += delta * (f - m.mean);
      }
      moments[c] = m;
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(chunks, 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  detail::ChunkMoments total;
  for (const auto& m : moments) detail::combine(total, m);
  const double variance = n > 1 ? total.m2 / static_cast<double>(n - 1) : 0.0;
  return McEstimate{kRegionVolume * total.mean,
                    kRegionVolume * std::sqrt(variance / static_cast<double>(n)), n, seed};
}

}  // namespace zgap::mc
