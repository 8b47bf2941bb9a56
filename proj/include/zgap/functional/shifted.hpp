#pragma once

#include <cstdint>
#include <span>

#include "zgap/functional/amplifier.hpp"
#include "zgap/functional/integrand.hpp"
#include "zgap/mc/estimator.hpp"

namespace zgap::functional {

/// Monte Carlo value of the shifted functional c(A, B); reduces to c0(b) at
/// zero shift. Throws std::invalid_argument for n = 0.
mc::McEstimate shifted_c(const AmplifierConfig& config, std::span<const double> b,
                         const Shifts& shifts, std::uint64_t n, std::uint64_t seed,
                         unsigned threads = 1);

}  // namespace zgap::functional
