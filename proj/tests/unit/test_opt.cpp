#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "zgap/errors.hpp"
#include "zgap/functional/gap_functional.hpp"
#include "zgap/opt/optimize.hpp"
#include "zgap/opt/rayleigh.hpp"
#include "zgap/opt/sym_matrix.hpp"

using namespace zgap;
using namespace zgap::opt;
using functional::AmplifierConfig;

namespace {

AmplifierConfig make(BigRational theta, unsigned r, unsigned d) {
  AmplifierConfig c;
  c.theta = theta;
  c.r = r;
  c.degree = d;
  return c;
}

SymMatrix random_spd(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (auto& row : a) {
    for (auto& v : row) v = g(rng);
  }
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * a[j][k];
      m.set(i, j, (i == j ? 1.0 : 0.0) + s / static_cast<double>(n));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("symmetric matrix construction") {
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}}), std::invalid_argument);
  const auto m = SymMatrix::from_rows({{2, 1}, {1, 3}});
  CHECK(m(0, 1) == 1);
  const std::vector<double> x{1, 2};
  CHECK(m.quadratic(x) == 2 + 4 + 12);
  CHECK(m.apply(x) == std::vector<double>{4, 7});
  CHECK(m.frobenius_norm() == doctest::Approx(std::sqrt(15.0)));
}

TEST_CASE("Jacobi eigenvalues") {
  const auto m = SymMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
  const auto e = jacobi_eigen(m);
  CHECK(e.values[0] == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e.values[2] == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-14));
  for (std::size_t k = 0; k < 3; ++k) {
    const auto mv = m.apply(e.vectors[k]);
    for (std::size_t i = 0; i < 3; ++i) CHECK(mv[i] == doctest::Approx(e.values[k] * e.vectors[k][i]).epsilon(1e-12));
  }
}

TEST_CASE("Cholesky rejects indefinite forms") {
  CHECK_THROWS_AS(cholesky(SymMatrix::from_rows({{1, 2}, {2, 1}})), NumericalContractError);
  const auto l = cholesky(SymMatrix::from_rows({{4, 2}, {2, 5}}));
  CHECK(l[0] == 2);
  CHECK(l[2] == 1);
  CHECK(l[3] == 2);
}

TEST_CASE("Rayleigh maximum examples") {
  const auto id = SymMatrix::identity(3);
  const auto a = rayleigh_max(id, id);
  CHECK(a.lambda == doctest::Approx(1.0).epsilon(1e-14));
  const auto b = rayleigh_max(SymMatrix::from_rows({{2, 0}, {0, 1}}), SymMatrix::identity(2));
  CHECK(b.lambda == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(b.vector[0]) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(b.vector[1]) < 1e-14);
  CHECK_THROWS_AS(rayleigh_max(id, SymMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})),
                  NumericalContractError);
}

TEST_CASE("Rayleigh maximum beats random search") {
  std::mt19937 rng(51);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 3; ++trial) {
    const auto c0 = random_spd(rng, 4), c1 = random_spd(rng, 4);
    const auto res = rayleigh_max(c0, c1);
    CHECK(res.scaled_residual <= kResidualTolerance);
    // 10^6 random directions: half uniform, half perturbations of the
    // incumbent with a shrinking radius
    auto quotient = [&](const std::vector<double>& v) { return c0.quadratic(v) / c1.quadratic(v); };
    std::vector<double> x(4), incumbent(4, 1.0);
    double best = quotient(incumbent);
    for (int k = 0; k < 1000000; ++k) {
      const double radius = k < 500000 ? 0.0 : 0.3 * std::pow(1e-4, (k - 500000) / 500000.0);
      for (std::size_t i = 0; i < 4; ++i) {
        x[i] = radius == 0.0 ? g(rng) : incumbent[i] + radius * g(rng);
      }
      const double q = quotient(x);
      if (q > best) {
        best = q;
        const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        for (std::size_t i = 0; i < 4; ++i) incumbent[i] = x[i] / norm;
      }
    }
    CHECK(best <= res.lambda * (1 + 1e-12));
    CHECK(best >= res.lambda * (1 - 1e-4));
    CHECK(c0.quadratic(res.vector) / c1.quadratic(res.vector) ==
          doctest::Approx(res.lambda).epsilon(1e-12));
  }
}

TEST_CASE("kappa at fixed nu") {
  const auto f0 = functional::assemble(make(0, 1, 0));
  CHECK(kappa_of_nu(f0, 1.0).kappa == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK(kappa_of_nu(f0, 0.0).kappa == doctest::Approx(std::sqrt(6.0 / 7)).epsilon(1e-14));
  const auto f = functional::assemble(functional::reference_config());
  const auto p = kappa_of_nu(f, functional::kReferenceNu);
  CHECK(p.kappa >= 2.866);
  CHECK(p.scaled_residual <= kResidualTolerance);
  CHECK(p.b[0] == 1.0);
}

TEST_CASE("amplifier normalization") {
  std::vector<double> b{2, -4, 6};
  normalize_amplifier(b);
  CHECK(b == std::vector<double>{1, -2, 3});
  std::vector<double> c{0, -4, 2};
  normalize_amplifier(c);
  CHECK(c == std::vector<double>{0, 1, -0.5});
}

TEST_CASE("golden section") {
  const double x = golden_section_maximize([](double t) { return -(t - 1.3) * (t - 1.3); }, 0, 4, 1e-10);
  CHECK(x == doctest::Approx(1.3).epsilon(1e-8));
}

TEST_CASE("optimize recovers sqrt(6) without amplification") {
  const auto f0 = functional::assemble(make(0, 1, 0));
  const auto r = optimize(f0, NuRange{0, 4});
  CHECK(std::abs(r.nu - 1.0) < 1e-3);
  CHECK(std::abs(r.kappa - std::sqrt(6.0)) < 1e-6);
  CHECK(r.h == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("optimize dominates point queries and the reference amplifier") {
  const auto f = functional::assemble(functional::reference_config());
  const auto best = optimize(f, NuRange{0, 4});
  CHECK(best.kappa >= 2.866);
  CHECK(std::abs(best.nu - 1.28) < 0.05);
  for (const auto& p : kappa_curve(f, NuRange{0, 4})) CHECK(best.kappa >= p.kappa);
  const auto h = functional::evaluate_h(f, best.coefficients, best.nu, best.kappa);
  CHECK(h.h == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("kappa curve is continuous on the grid") {
  const auto f = functional::assemble(functional::reference_config());
  const auto pts = kappa_curve(f, NuRange{0.5, 2.0}, 0.01);
  REQUIRE(pts.size() == 151);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i].nu > pts[i - 1].nu);
    CHECK(std::abs(pts[i].kappa - pts[i - 1].kappa) < 0.05);
  }
}

TEST_CASE("kappa moves by at most 1e-3 under a 1e-6 step in nu") {
  const auto f = functional::assemble(functional::reference_config());
  for (double nu = 0.0; nu <= 4.0; nu += 0.25) {
    CHECK(std::abs(kappa_of_nu(f, nu + 1e-6).kappa - kappa_of_nu(f, nu).kappa) <= 1e-3);
  }
}

TEST_CASE("optimal kappa does not decrease with degree") {
  for (const BigRational theta : {BigRational(0), BigRational(1, 8), BigRational(1, 4)}) {
    const auto full = functional::assemble(make(theta, 1, 5));
    double prev = 0.0;
    for (unsigned d = 0; d <= 5; ++d) {
      const double k = optimize(full.truncated(d), NuRange{0, 4}).kappa;
      CHECK(k - prev >= -1e-9);
      prev = k;
    }
  }
}

TEST_CASE("h is invariant under rescaling b") {
  const auto f = functional::assemble(functional::reference_config());
  const std::vector<double> b{1.0, -0.7, 0.3, 0.05, -0.2};
  const double h = functional::evaluate_h(f, b, 1.25, 2.8).h;
  for (double s : {-3.0, 1e-3, 0.5, 7.0, 1e4}) {
    std::vector<double> sb = b;
    for (auto& v : sb) v *= s;
    CHECK(std::abs(functional::evaluate_h(f, sb, 1.25, 2.8).h - h) <= 1e-12 * std::abs(h));
  }
}

TEST_CASE("no random vector beats the computed maximum, including a degenerate pencil") {
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> g;
  // theta = 0, degree 4 makes C1 proportional to C0: every direction is optimal
  for (const auto& cfg : {make(0, 1, 4), functional::reference_config()}) {
    const auto f = functional::assemble(cfg);
    const auto c0 = SymMatrix::from_rational(f.c0);
    for (double nu : {0.25, 1.0, 1.28, 3.0}) {
      const auto c1 = SymMatrix::from_rational(f.c1_matrix(from_double(nu)));
      const auto res = rayleigh_max(c0, c1);
      std::vector<double> x(f.degree() + 1);
      for (int k = 0; k < 1000; ++k) {
        for (auto& v : x) v = g(rng);
        CHECK(c0.quadratic(x) / c1.quadratic(x) <= res.lambda * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("scan") {
  const std::vector<BigRational> thetas{BigRational(1, 4)};
  const std::vector<unsigned> rs{1};
  const std::vector<unsigned> degrees{0, 1, 2, 3, 4};
  std::size_t calls = 0;
  const auto rows = scan(thetas, rs, degrees, NuRange{0, 4}, 1e-8, 2,
                         [&](const ScanRow&, std::size_t completed, std::size_t total) {
                           CHECK(completed == calls + 1);
                           CHECK(total == 5);
                           ++calls;
                         });
  REQUIRE(rows.size() == 5);
  CHECK(calls == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].result.has_value());
    CHECK(rows[i].degree == degrees[i]);
    if (i > 0) CHECK(rows[i].result->kappa >= rows[i - 1].result->kappa - 1e-12);
  }
  const auto single = optimize(functional::assemble(functional::reference_config()), NuRange{0, 4});
  CHECK(rows[4].result->kappa == single.kappa);
  CHECK(rows[4].result->nu == single.nu);
  CHECK(rows[4].result->coefficients == single.coefficients);

  // thread count does not change the table
  const auto serial = scan(thetas, rs, degrees, NuRange{0, 4}, 1e-8, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial[i].result->kappa == rows[i].result->kappa);
}

TEST_CASE("scan covers r = 2") {
  const auto rows = scan({BigRational(1, 4)}, {1, 2}, {4}, NuRange{0, 4});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].r == 1);
  CHECK(rows[1].r == 2);
  REQUIRE(rows[1].result.has_value());
  CHECK(rows[1].result->kappa > 0);
  CHECK(std::isfinite(rows[1].result->kappa));
}
