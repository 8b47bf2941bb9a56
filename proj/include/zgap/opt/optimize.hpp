#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zgap/exact/big_rational.hpp"
#include "zgap/functional/gap_functional.hpp"
#include "zgap/opt/rayleigh.hpp"

namespace zgap::opt {

struct KappaPoint {
  double nu = 0.0;
  double kappa = 0.0;
  std::vector<double> b;  // normalized so that b0 = 1 (or max |b_j| = 1)
  double scaled_residual = 0.0;
};

/// kappa(nu) = sqrt of the top eigenvalue of (C0, nu^2 K2 + nu K1 + K0).
KappaPoint kappa_of_nu(const functional::GapFunctional& functional, double nu);

/// Rescales b so that b0 = 1; when |b0| < 1e-8 (relative to max |b_j|) the
/// largest-magnitude entry is set to 1 instead.
void normalize_amplifier(std::vector<double>& b);

struct NuRange {
  double lo = 0.0;
  double hi = 4.0;
};

inline constexpr double kNuGridStep = 0.05;

/// Maximizer of f on [lo, hi] by golden-section search, to width tol.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

/// kappa(nu) on an equally spaced grid lo, lo + step, ..., <= hi.
std::vector<KappaPoint> kappa_curve(const functional::GapFunctional& functional, NuRange range,
                                    double step = kNuGridStep);

/// Coarse grid (step 0.05) then golden-section refinement around the best
/// grid point. h in the result is evaluated at kappa_input = kappa (so 1).
functional::BoundResult optimize(const functional::GapFunctional& functional, NuRange range,
                                 double nu_tol = 1e-8);

struct ScanRow {
  BigRational theta;
  unsigned r = 1;
  unsigned degree = 0;
  std::optional<functional::BoundResult> result;
  std::string error;
};

/// Called once per finished row with the number of rows finished so far.
using ScanProgress =
    std::function<void(const ScanRow&, std::size_t completed, std::size_t total)>;

/// One optimize() per (theta, r, degree) in input order (theta outermost).
/// A failing row records its error and the scan continues. Each (theta, r)
/// is assembled once at the largest degree and truncated.
std::vector<ScanRow> scan(const std::vector<BigRational>& thetas,
                          const std::vector<unsigned>& rs, const std::vector<unsigned>& degrees,
                          NuRange range, double nu_tol = 1e-8, unsigned threads = 1,
                          const ScanProgress& progress = {});

}  // namespace zgap::opt
