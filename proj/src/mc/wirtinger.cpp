#include "zgap/mc/wirtinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zgap::mc {

namespace {

double simpson(std::span<const double> y, double h) {
  const std::size_t panels = y.size() - 1;
  std::size_t even = panels % 2 == 0 ? panels : panels - 3;
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= even; i += 2) sum += y[i] + 4.0 * y[i + 1] + y[i + 2];
  sum *= h / 3.0;
  if (even != panels) {
    const std::size_t i = even;
    sum += 3.0 * h / 8.0 * (y[i] + 3.0 * y[i + 1] + 3.0 * y[i + 2] + y[i + 3]);
  }
  return sum;
}

}  // namespace

double wirtinger_bound(double a, double b) {
  const double s = (b - a) / std::numbers::pi;
  return s * s;
}

double wirtinger_ratio(std::span<const double> f, double a, double b) {
  if (f.size() < kMinWirtingerPoints) {
    throw std::invalid_argument("wirtinger_ratio needs at least 1000 grid points");
  }
  if (!(b > a)) throw std::invalid_argument("interval must satisfy a < b");
  const double scale = std::abs(f[f.size() / 2]) + 1.0;
  if (std::abs(f.front()) > 1e-12 * scale || std::abs(f.back()) > 1e-12 * scale) {
    throw std::invalid_argument("f must vanish at both endpoints");
  }
  const std::size_t n = f.size();
  const double h = (b - a) / static_cast<double>(n - 1);

  std::vector<double> f2(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) f2[i] = f[i] * f[i];
  for (std::size_t i = 0; i < n; ++i) {
    double d;
    if (i == 0) {
      d = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    } else if (i == n - 1) {
      d = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    } else {
      d = (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    d2[i] = d * d;
  }
  const double denom = simpson(d2, h);
  if (!(denom > 0)) throw std::invalid_argument("f' vanishes identically");
  return simpson(f2, h) / denom;
}

}  // namespace zgap::mc
