#pragma once

#include <cstdint>
#include <span>
#include <variant>

#include "zgap/exact/monomial.hpp"
#include "zgap/functional/amplifier.hpp"
#include "zgap/functional/integrand.hpp"
#include "zgap/mc/estimator.hpp"

namespace zgap::mc {

struct C0Target {};
struct C1Target {
  double nu = 0.0;
};
struct ShiftedTarget {
  functional::Shifts shifts;
};
/// Bare monomial x^a x1^b x2^c x3^d x4^e; config and b are ignored.
struct MonomialTarget {
  exact::Monomial::Exponents exponents{};
};

using McTarget = std::variant<C0Target, C1Target, ShiftedTarget, MonomialTarget>;

inline constexpr std::uint64_t kMinSamples = 1000;

/// Plain Monte Carlo over R for the selected integrand. For C1Target the
/// (t1, t2) variables are sampled too, so the estimate does not rely on the
/// closed-form t-integration used by the exact assembly.
McEstimate mc_estimate(const McTarget& target, const functional::AmplifierConfig& config,
                       std::span<const double> b, std::uint64_t n, std::uint64_t seed,
                       unsigned threads = 1);

struct OperatorCheck {
  double fd_value = 0.0;
  double fd_std_error = 0.0;
  double exact_c1 = 0.0;
  double residual = 0.0;  // |fd - exact| / |exact|
  /// false when 3 standard errors exceed the 1e-2 residual budget.
  bool certified = false;
};

/// (nu + sum_i d/dA_i)(nu + sum_j d/dB_j) c(A, B) at A = B = 0 by central
/// differences on the shifted integrand, all 49 stencil points evaluated on
/// the same samples. Compared against the exact c1(nu, b).
OperatorCheck operator_identity_check(const functional::AmplifierConfig& config,
                                      std::span<const double> b, double nu, double fd_step,
                                      std::uint64_t n, std::uint64_t seed, unsigned threads = 1);

}  // namespace zgap::mc
