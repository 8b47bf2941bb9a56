#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zgap/exact/big_rational.hpp"
#include "zgap/exact/sparse_poly.hpp"
#include "zgap/functional/amplifier.hpp"

namespace zgap::functional {

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Region weights of the two mean-value functionals, as exact polynomials.
/// With B = 1 - theta(x1+x3), C = 1 - theta(x2+x4), S = x+x1+x2+x3+x4 and
/// core = x^{2r^2-1} (x1 x2 x3 x4)^{r-1}:
///   c0 weight   = B C core
///   c1(nu)      = B C core * [A^2 - A(B+C) + B^2/3 + C^2/3 + BC/2],  A = nu - theta S
/// where the bracket is the exact integral over (t1, t2) in [0,1]^2 of
/// (A - B t1 - C t2)^2. The c1 weight is split by powers of nu.
exact::SparsePoly c0_weight(const AmplifierConfig& config);

struct C1Weights {
  exact::SparsePoly nu2, nu1, nu0;
};
C1Weights c1_weights(const AmplifierConfig& config);

/// M[i][j] = integral over R of weight * u^i v^j, u = 1-x-x1-x2, v = 1-x-x3-x4.
RationalMatrix moment_matrix(const exact::SparsePoly& weight, unsigned degree);

/// Same matrix through explicit expansion of weight * u^i * v^j followed by
/// term-by-term integration. Slower; kept as an independent route.
RationalMatrix moment_matrix_by_expansion(const exact::SparsePoly& weight, unsigned degree);

RationalMatrix assemble_c0(const AmplifierConfig& config);

struct C1Matrices {
  RationalMatrix k2, k1, k0;
};
C1Matrices assemble_c1(const AmplifierConfig& config);

/// c0(b) = b^T C0 b and c1(nu, b) = b^T (nu^2 K2 + nu K1 + K0) b.
struct GapFunctional {
  AmplifierConfig config;
  RationalMatrix c0, k2, k1, k0;

  unsigned degree() const { return static_cast<unsigned>(c0.size()) - 1; }

  RationalMatrix c1_matrix(const BigRational& nu) const;

  /// Leading principal blocks, i.e. the functional for a lower-degree P.
  GapFunctional truncated(unsigned degree) const;
};

GapFunctional assemble(const AmplifierConfig& config);

/// Exact b^T M b for real b (b is converted exactly to rationals).
double quadratic_form(const RationalMatrix& m, std::span<const double> b);

struct BoundResult {
  double kappa = 0.0;  // implied: sqrt(c0 / c1)
  std::optional<double> kappa_input;
  double nu = 0.0;
  std::vector<double> coefficients;
  double h = 0.0;  // c0 / (kappa_input^2 c1), or 1 at kappa_input = kappa
  double c0 = 0.0;
  double c1 = 0.0;
};

/// Decision quantity h = c0 / (kappa^2 c1(nu)); h > 1 certifies a gap bound.
/// Throws NumericalContractError if c0 or c1 is not positive.
BoundResult evaluate_h(const GapFunctional& functional, std::span<const double> b, double nu,
                       double kappa);

/// (4k^2 - 1) / (4k^4).
BigRational hall_conjecture_ratio(unsigned k);

/// Leading term of the sharp mean square of |f| over [T, 2T]:
///   c0(b) A (theta L)^{2r^2+4r} L^2 T / ((2r^2-1)! ((r-1)!)^4)
/// with L = log(sqrt|D| T / 4 pi^2) and the smoothing weight normalized to 1.
double mean_square_main_term(double T, long D, const GapFunctional& functional,
                             std::span<const double> b, double A_value);

}  // namespace zgap::functional
