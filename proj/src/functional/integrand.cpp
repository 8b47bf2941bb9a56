#include "zgap/functional/integrand.hpp"

#include <cmath>
#include <stdexcept>

namespace zgap::functional {

double phi(double w) {
  if (std::abs(w) < 1e-5) return 1.0 - w / 2.0 + w * w / 6.0 - w * w * w / 24.0;
  return -std::expm1(-w) / w;
}

IntegrandKernel::IntegrandKernel(const AmplifierConfig& config, std::span<const double> b)
    : theta_(to_double(config.theta)), r_(config.r), b_(b.begin(), b.end()) {
  config.validate();
  require_nonzero(b_);
  if (b_.size() != config.degree + 1) {
    throw std::invalid_argument("coefficient vector length does not match amplifier degree");
  }
}

double IntegrandKernel::poly(double z) const {
  double acc = 0.0;
  for (auto it = b_.rbegin(); it != b_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double IntegrandKernel::c0(const mc::RegionPoint& p) const {
  const double core = std::pow(p.x, 2.0 * r_ * r_ - 1.0) *
                      std::pow(p.x1 * p.x2 * p.x3 * p.x4, static_cast<double>(r_) - 1.0);
  const double B = 1.0 - theta_ * (p.x1 + p.x3);
  const double C = 1.0 - theta_ * (p.x2 + p.x4);
  return core * B * C * poly(1.0 - p.x - p.x1 - p.x2) * poly(1.0 - p.x - p.x3 - p.x4);
}

double IntegrandKernel::c1(const mc::RegionPoint& p, double nu, double t1, double t2) const {
  const double B = 1.0 - theta_ * (p.x1 + p.x3);
  const double C = 1.0 - theta_ * (p.x2 + p.x4);
  const double S = p.x + p.x1 + p.x2 + p.x3 + p.x4;
  const double q = nu - theta_ * S - t1 * B - t2 * C;
  return c0(p) * q * q;
}

std::array<double, 6> IntegrandKernel::shift_exponents(const mc::RegionPoint& p) const {
  // y^{-(A3+B3)x - A3(x1+x2) - B3(x3+x4) - B1 x1 - B2 x2 - A1 x3 - A2 x4}
  return {p.x3, p.x4, p.x + p.x1 + p.x2, p.x1, p.x2, p.x + p.x3 + p.x4};
}

double IntegrandKernel::shifted(const mc::RegionPoint& p, const Shifts& s) const {
  const auto g = shift_exponents(p);
  double e = 0.0;
  for (int k = 0; k < 3; ++k) e += g[k] * s.alpha[k] + g[k + 3] * s.beta[k];
  const double B = 1.0 - theta_ * (p.x1 + p.x3);
  const double C = 1.0 - theta_ * (p.x2 + p.x4);
  return std::exp(-theta_ * e) * phi((s.alpha[0] + s.beta[0]) * B) *
         phi((s.alpha[1] + s.beta[1]) * C) * c0(p);
}

}  // namespace zgap::functional
