#include "zgap/functional/amplifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zgap::functional {

void AmplifierConfig::validate() const {
  if (theta < 0 || theta > BigRational(1, 4)) {
    throw std::invalid_argument("theta must be in [0, 1/4]");
  }
  if (r < 1) throw std::invalid_argument("r must be a positive integer");
  if (coefficients) {
    if (coefficients->size() != degree + 1) {
      throw std::invalid_argument("expected " + std::to_string(degree + 1) +
                                  " coefficients for degree " + std::to_string(degree) + ", got " +
                                  std::to_string(coefficients->size()));
    }
    require_nonzero(*coefficients);
  }
}

AmplifierConfig reference_config() {
  return AmplifierConfig{BigRational(1, 4), 1, 4, reference_coefficients()};
}

void require_nonzero(std::span<const double> b) {
  if (b.empty() || std::all_of(b.begin(), b.end(), [](double v) { return v == 0.0; })) {
    throw std::invalid_argument("coefficient vector b must be non-zero");
  }
  if (!std::all_of(b.begin(), b.end(), [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument("coefficient vector b must be finite");
  }
}

}  // namespace zgap::functional
