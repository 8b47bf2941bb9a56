#include "zgap/opt/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "zgap/errors.hpp"

namespace zgap::opt {

void normalize_amplifier(std::vector<double>& b) {
  double big = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b[i]) > big) {
      big = std::abs(b[i]);
      arg = i;
    }
  }
  if (big == 0.0) return;
  const double pivot = std::abs(b[0]) >= 1e-8 * big ? b[0] : b[arg];
  for (double& v : b) v /= pivot;
}

KappaPoint kappa_of_nu(const functional::GapFunctional& functional, double nu) {
  const SymMatrix c0 = SymMatrix::from_rational(functional.c0);
  const SymMatrix c1 = SymMatrix::from_rational(functional.c1_matrix(from_double(nu)));
  RayleighResult eig = rayleigh_max(c0, c1);
  if (!(eig.lambda > 0)) throw NumericalContractError("top generalized eigenvalue is not positive");
  KappaPoint out{nu, std::sqrt(eig.lambda), std::move(eig.vector), eig.scaled_residual};
  normalize_amplifier(out.b);
  return out;
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<KappaPoint> kappa_curve(const functional::GapFunctional& functional, NuRange range,
                                    double step) {
  if (!(step > 0) || !std::isfinite(range.lo) || !std::isfinite(range.hi) ||
      range.hi < range.lo) {
    throw std::invalid_argument("invalid nu range or step");
  }
  const auto count = static_cast<std::size_t>(std::floor((range.hi - range.lo) / step + 1e-9)) + 1;
  std::vector<KappaPoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(kappa_of_nu(functional, range.lo + static_cast<double>(k) * step));
  }
  return out;
}

functional::BoundResult optimize(const functional::GapFunctional& functional, NuRange range,
                                 double nu_tol) {
  if (!(nu_tol > 0)) throw std::invalid_argument("nu tolerance must be positive");
  const auto grid = kappa_curve(functional, range, kNuGridStep);
  const auto best = std::max_element(grid.begin(), grid.end(), [](const auto& l, const auto& r) {
    return l.kappa < r.kappa;
  });
  const double lo = std::max(range.lo, best->nu - kNuGridStep);
  const double hi = std::min(range.hi, best->nu + kNuGridStep);
  KappaPoint winner = *best;
  if (hi > lo) {
    const double nu = golden_section_maximize(
        [&](double v) { return kappa_of_nu(functional, v).kappa; }, lo, hi, nu_tol);
    KappaPoint refined = kappa_of_nu(functional, nu);
    if (refined.kappa >= winner.kappa) winner = std::move(refined);
  }
  functional::BoundResult out = functional::evaluate_h(functional, winner.b, winner.nu, winner.kappa);
  out.kappa_input.reset();
  return out;
}

std::vector<ScanRow> scan(const std::vector<BigRational>& thetas,
                          const std::vector<unsigned>& rs, const std::vector<unsigned>& degrees,
                          NuRange range, double nu_tol, unsigned threads,
                          const ScanProgress& progress) {
  if (thetas.empty() || rs.empty() || degrees.empty()) {
    throw std::invalid_argument("scan lists must be non-empty");
  }
  const unsigned max_degree = *std::max_element(degrees.begin(), degrees.end());
  std::vector<ScanRow> rows;
  for (const auto& th : thetas) {
    for (unsigned r : rs) {
      for (unsigned d : degrees) rows.push_back(ScanRow{th, r, d, std::nullopt, {}});
    }
  }
  const std::size_t groups = thetas.size() * rs.size();
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  std::size_t done = 0;

  auto worker = [&] {
    for (std::size_t g = next++; g < groups; g = next++) {
      const std::size_t first = g * degrees.size();
      std::optional<functional::GapFunctional> full;
      std::string group_error;
      try {
        full = functional::assemble(
            functional::AmplifierConfig{rows[first].theta, rows[first].r, max_degree, {}});
      } catch (const std::exception& e) {
        group_error = e.what();
      }
      for (std::size_t k = 0; k < degrees.size(); ++k) {
        ScanRow& row = rows[first + k];
        if (!full) {
          row.error = group_error;
        } else {
          try {
            row.result = optimize(full->truncated(row.degree), range, nu_tol);
          } catch (const std::exception& e) {
            row.error = e.what();
          }
        }
        if (progress) {
          std::lock_guard lock(progress_mutex);
          progress(row, ++done, rows.size());
        }
      }
    }
  };

  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(groups));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace zgap::opt
