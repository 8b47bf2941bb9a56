#pragma once

#include <array>
#include <span>
#include <vector>

#include "zgap/functional/amplifier.hpp"
#include "zgap/mc/region_sampler.hpp"

namespace zgap::functional {

/// Dimensionless shifts: (A1, A2, A3) and (B1, B2, B3), where A_i = alpha_i L
/// and B_i = beta_i L.
struct Shifts {
  std::array<double, 3> alpha{};
  std::array<double, 3> beta{};
};

/// phi(w) = (1 - e^{-w}) / w, phi(0) = 1: the exact t-integral of e^{-w t}.
double phi(double w);

/// Floating-point pointwise integrands on the region; the Monte Carlo routes
/// are built on these. Holds no mutable state.
class IntegrandKernel {
 public:
  IntegrandKernel(const AmplifierConfig& config, std::span<const double> b);

  double theta() const { return theta_; }

  /// x^{2r^2-1} (x1 x2 x3 x4)^{r-1} P(u) P(v) (1 - theta(x1+x3)) (1 - theta(x2+x4))
  double c0(const mc::RegionPoint& p) const;

  /// c0 integrand times (nu - theta S - t1 B - t2 C)^2 at explicit (t1, t2).
  double c1(const mc::RegionPoint& p, double nu, double t1, double t2) const;

  /// Shifted integrand with (t1, t2) integrated exactly through phi.
  double shifted(const mc::RegionPoint& p, const Shifts& s) const;

  /// Exponent coefficients g_k in  exp(-theta * sum_k g_k * shift_k), ordered
  /// (A1, A2, A3, B1, B2, B3).
  std::array<double, 6> shift_exponents(const mc::RegionPoint& p) const;

 private:
  double poly(double z) const;

  double theta_;
  unsigned r_;
  std::vector<double> b_;
};

}  // namespace zgap::functional
