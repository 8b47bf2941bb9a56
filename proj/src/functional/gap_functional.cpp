#include "zgap/functional/gap_functional.hpp"

#include <cmath>
#include <string>

#include "zgap/errors.hpp"
#include "zgap/exact/region_integral.hpp"
#include "zgap/field/quad_field.hpp"

namespace zgap::functional {

using exact::Monomial;
using exact::SparsePoly;
using exact::Var;

namespace {

SparsePoly var(Var v) { return SparsePoly::variable(v); }
SparsePoly one() { return SparsePoly::constant(BigRational(1)); }

struct RegionForms {
  SparsePoly B, C, S, core;
};

RegionForms region_forms(const AmplifierConfig& config) {
  config.validate();
  const BigRational& th = config.theta;
  RegionForms f;
  f.B = one() - th * (var(Var::x1) + var(Var::x3));
  f.C = one() - th * (var(Var::x2) + var(Var::x4));
  f.S = var(Var::x) + var(Var::x1) + var(Var::x2) + var(Var::x3) + var(Var::x4);
  const unsigned r = config.r;
  f.core = SparsePoly::term(Monomial({2 * r * r - 1, r - 1, r - 1, r - 1, r - 1}), BigRational(1));
  return f;
}

void check_degree_guard(const SparsePoly& weight, unsigned degree) {
  const unsigned total = weight.degree() + 2 * degree;
  if (total > exact::kDefaultDegreeGuard) {
    throw exact::DegreeGuardError("integrand degree " + std::to_string(total) +
                                  " exceeds degree guard " +
                                  std::to_string(exact::kDefaultDegreeGuard));
  }
}

RationalMatrix zero_matrix(unsigned degree) {
  return RationalMatrix(degree + 1, std::vector<BigRational>(degree + 1, BigRational(0)));
}

}  // namespace

SparsePoly c0_weight(const AmplifierConfig& config) {
  const RegionForms f = region_forms(config);
  return f.B * f.C * f.core;
}

C1Weights c1_weights(const AmplifierConfig& config) {
  const RegionForms f = region_forms(config);
  const BigRational& th = config.theta;
  const SparsePoly base = f.B * f.C * f.core;
  // A = nu + A0 with A0 = -theta S; collect the t-integrated square by nu power.
  const SparsePoly a0 = -(th * f.S);
  const SparsePoly bc_sum = f.B + f.C;
  const SparsePoly nu1 = BigRational(2) * a0 - bc_sum;
  const SparsePoly nu0 = a0 * a0 - a0 * bc_sum + BigRational(1, 3) * (f.B * f.B) +
                         BigRational(1, 3) * (f.C * f.C) + BigRational(1, 2) * (f.B * f.C);
  return C1Weights{base, base * nu1, base * nu0};
}

RationalMatrix moment_matrix(const SparsePoly& weight, unsigned degree) {
  check_degree_guard(weight, degree);
  RationalMatrix m = zero_matrix(degree);
  for (unsigned i = 0; i <= degree; ++i) {
    for (unsigned j = 0; j <= degree; ++j) {
      BigRational sum(0);
      for (const auto& [mono, c] : weight.terms()) {
        sum += c * exact::simplex_power_integral(mono, i, j);
      }
      m[i][j] = sum;
    }
  }
  return m;
}

RationalMatrix moment_matrix_by_expansion(const SparsePoly& weight, unsigned degree) {
  check_degree_guard(weight, degree);
  const SparsePoly u = one() - var(Var::x) - var(Var::x1) - var(Var::x2);
  const SparsePoly v = one() - var(Var::x) - var(Var::x3) - var(Var::x4);
  RationalMatrix m = zero_matrix(degree);
  SparsePoly wu = weight;
  for (unsigned i = 0; i <= degree; ++i) {
    SparsePoly wuv = wu;
    for (unsigned j = 0; j <= degree; ++j) {
      m[i][j] = exact::integrate_polynomial(wuv);
      if (j < degree) wuv = exact::expand_product(std::vector<SparsePoly>{wuv, v});
    }
    if (i < degree) wu = exact::expand_product(std::vector<SparsePoly>{wu, u});
  }
  return m;
}

RationalMatrix assemble_c0(const AmplifierConfig& config) {
  return moment_matrix(c0_weight(config), config.degree);
}

C1Matrices assemble_c1(const AmplifierConfig& config) {
  const C1Weights w = c1_weights(config);
  return C1Matrices{moment_matrix(w.nu2, config.degree), moment_matrix(w.nu1, config.degree),
                    moment_matrix(w.nu0, config.degree)};
}

GapFunctional assemble(const AmplifierConfig& config) {
  config.validate();
  C1Matrices c1 = assemble_c1(config);
  return GapFunctional{config, assemble_c0(config), std::move(c1.k2), std::move(c1.k1),
                       std::move(c1.k0)};
}

RationalMatrix GapFunctional::c1_matrix(const BigRational& nu) const {
  const BigRational nu2 = nu * nu;
  RationalMatrix m = k0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += nu2 * k2[i][j] + nu * k1[i][j];
  }
  return m;
}

GapFunctional GapFunctional::truncated(unsigned d) const {
  if (d > degree()) throw std::invalid_argument("cannot truncate to a higher degree");
  auto block = [d](const RationalMatrix& m) {
    RationalMatrix out(d + 1);
    for (unsigned i = 0; i <= d; ++i) out[i].assign(m[i].begin(), m[i].begin() + d + 1);
    return out;
  };
  GapFunctional g{config, block(c0), block(k2), block(k1), block(k0)};
  g.config.degree = d;
  if (g.config.coefficients) g.config.coefficients->resize(d + 1);
  return g;
}

double quadratic_form(const RationalMatrix& m, std::span<const double> b) {
  if (b.size() != m.size()) {
    throw std::invalid_argument("coefficient vector has " + std::to_string(b.size()) +
                                " entries, functional expects " + std::to_string(m.size()));
  }
  std::vector<BigRational> bq;
  bq.reserve(b.size());
  for (double v : b) bq.push_back(from_double(v));
  BigRational sum(0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigRational row(0);
    for (std::size_t j = 0; j < m.size(); ++j) row += m[i][j] * bq[j];
    sum += bq[i] * row;
  }
  return to_double(sum);
}

BoundResult evaluate_h(const GapFunctional& functional, std::span<const double> b, double nu,
                       double kappa) {
  require_nonzero(b);
  if (!(kappa > 0) || !std::isfinite(kappa)) throw std::invalid_argument("kappa must be positive");
  BoundResult out;
  out.c0 = quadratic_form(functional.c0, b);
  out.c1 = quadratic_form(functional.c1_matrix(from_double(nu)), b);
  if (!(out.c1 > 0)) throw NumericalContractError("c1(nu, b) is not positive");
  if (!(out.c0 > 0)) throw NumericalContractError("c0(b) is not positive");
  out.nu = nu;
  out.coefficients.assign(b.begin(), b.end());
  out.kappa_input = kappa;
  out.kappa = std::sqrt(out.c0 / out.c1);
  out.h = out.c0 / (kappa * kappa * out.c1);
  return out;
}

BigRational hall_conjecture_ratio(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  const BigInt kk(k);
  BigRational q(4 * kk * kk - 1, 4 * kk * kk * kk * kk);
  q.canonicalize();
  return q;
}

double mean_square_main_term(double T, long D, const GapFunctional& functional,
                             std::span<const double> b, double A_value) {
  require_nonzero(b);
  const auto stats = field::density_stats(T, D);
  const unsigned r = functional.config.r;
  const double L = stats.log_height;
  const double log_y = to_double(functional.config.theta) * L;
  const double c0 = quadratic_form(functional.c0, b);
  const double denom = std::tgamma(2.0 * r * r) * std::pow(std::tgamma(static_cast<double>(r)), 4);
  return c0 * A_value * std::pow(log_y, 2.0 * r * r + 4.0 * r) * L * L * T / denom;
}

}  // namespace zgap::functional
