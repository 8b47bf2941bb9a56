#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zgap/exact/big_rational.hpp"

namespace zgap::functional {

/// Parameters of the amplifier: length exponent theta (y = T^theta), the
/// divisor-function order r, and the degree of P(x) = sum_j b_j x^j.
struct AmplifierConfig {
  BigRational theta{0};
  unsigned r = 1;
  unsigned degree = 0;
  std::optional<std::vector<double>> coefficients;

  /// Throws std::invalid_argument with a user-facing message.
  void validate() const;
};

/// Coefficients of the explicit degree-4 P(x) used in the headline bound.
inline const std::vector<double>& reference_coefficients() {
  static const std::vector<double> b{1.0, -10.8998, 28.9444, -22.1343, 0.6148};
  return b;
}

/// theta = 1/4, r = 1, degree 4, the reference coefficients.
AmplifierConfig reference_config();
inline constexpr double kReferenceNu = 1.2773;
inline constexpr double kReferenceKappa = 2.866;

/// Throws std::invalid_argument if b is empty or identically zero.
void require_nonzero(std::span<const double> b);

}  // namespace zgap::functional
