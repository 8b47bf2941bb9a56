#include "zgap/mc/mc_oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "zgap/functional/gap_functional.hpp"

namespace zgap::mc {

using functional::IntegrandKernel;

namespace {

double monomial_value(const RegionPoint& p, const exact::Monomial::Exponents& e) {
  auto ipow = [](double v, unsigned k) {
    double r = 1.0;
    for (; k > 0; --k) r *= v;
    return r;
  };
  return ipow(p.x, e[0]) * ipow(p.x1, e[1]) * ipow(p.x2, e[2]) * ipow(p.x3, e[3]) *
         ipow(p.x4, e[4]);
}

// Finite-difference image of Q_A Q_B c(A, B) at the origin for one sample.
// Shift components are ordered (A1, A2, A3, B1, B2, B3); only A1+B1 and A2+B2
// enter phi, so phi is tabulated at the five stencil sums {-2h, ..., 2h}.
double operator_fd_sample(const IntegrandKernel& kernel, const RegionPoint& p, double nu,
                          double h) {
  const double theta = kernel.theta();
  const double base = kernel.c0(p);
  const auto g = kernel.shift_exponents(p);
  const double B = 1.0 - theta * (p.x1 + p.x3);
  const double C = 1.0 - theta * (p.x2 + p.x4);

  std::array<std::array<double, 3>, 6> expo{};  // [k][sign+1]
  for (int k = 0; k < 6; ++k) {
    expo[k] = {std::exp(theta * g[k] * h), 1.0, std::exp(-theta * g[k] * h)};
  }
  std::array<double, 5> phi_b{}, phi_c{};  // index sum/h + 2
  for (int s = -2; s <= 2; ++s) {
    phi_b[s + 2] = functional::phi(s * h * B);
    phi_c[s + 2] = functional::phi(s * h * C);
  }
  auto value = [&](const std::array<int, 6>& sign) {
    double e = 1.0;
    for (int k = 0; k < 6; ++k) e *= expo[k][sign[k] + 1];
    return e * phi_b[sign[0] + sign[3] + 2] * phi_c[sign[1] + sign[4] + 2] * base;
  };

  double first = 0.0;
  for (int k = 0; k < 6; ++k) {
    std::array<int, 6> plus{}, minus{};
    plus[k] = 1;
    minus[k] = -1;
    first += (value(plus) - value(minus)) / (2.0 * h);
  }
  double mixed = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) {
      double acc = 0.0;
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          std::array<int, 6> sign{};
          sign[i] = si;
          sign[j] = sj;
          acc += si * sj * value(sign);
        }
      }
      mixed += acc / (4.0 * h * h);
    }
  }
  return nu * nu * base + nu * first + mixed;
}

}  // namespace

McEstimate mc_estimate(const McTarget& target, const functional::AmplifierConfig& config,
                       std::span<const double> b, std::uint64_t n, std::uint64_t seed,
                       unsigned threads) {
  if (n < kMinSamples) throw std::invalid_argument("mc_estimate requires n >= 1000");
  return std::visit(
      [&](const auto& t) -> McEstimate {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, MonomialTarget>) {
          return region_estimate(
              [&](const RegionPoint& p, Stream&) { return monomial_value(p, t.exponents); }, n,
              seed, threads);
        } else {
          const IntegrandKernel kernel(config, b);
          if constexpr (std::is_same_v<T, C0Target>) {
            return region_estimate([&](const RegionPoint& p, Stream&) { return kernel.c0(p); },
                                   n, seed, threads);
          } else if constexpr (std::is_same_v<T, C1Target>) {
            return region_estimate(
                [&](const RegionPoint& p, Stream& s) {
                  const double t1 = s.uniform();
                  const double t2 = s.uniform();
                  return kernel.c1(p, t.nu, t1, t2);
                },
                n, seed, threads);
          } else {
            return region_estimate(
                [&](const RegionPoint& p, Stream&) { return kernel.shifted(p, t.shifts); }, n,
                seed, threads);
          }
        }
      },
      target);
}

OperatorCheck operator_identity_check(const functional::AmplifierConfig& config,
                                      std::span<const double> b, double nu, double fd_step,
                                      std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (!(fd_step >= 1e-3 && fd_step <= 1e-1)) {
    throw std::invalid_argument("fd_step must lie in [1e-3, 1e-1]");
  }
  if (n < kMinSamples) throw std::invalid_argument("operator_identity_check requires n >= 1000");
  const IntegrandKernel kernel(config, b);
  const McEstimate fd = region_estimate(
      [&](const RegionPoint& p, Stream&) { return operator_fd_sample(kernel, p, nu, fd_step); },
      n, seed, threads);

  const auto functional = functional::assemble(config);
  OperatorCheck out;
  out.fd_value = fd.mean;
  out.fd_std_error = fd.std_error;
  out.exact_c1 = functional::quadratic_form(functional.c1_matrix(from_double(nu)), b);
  out.residual = std::abs(out.fd_value - out.exact_c1) / std::abs(out.exact_c1);
  out.certified = 3.0 * out.fd_std_error <= 1e-2 * std::abs(out.exact_c1);
  return out;
}

}  // namespace zgap::mc
