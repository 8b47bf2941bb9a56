#include "zgap/opt/rayleigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zgap/errors.hpp"

namespace zgap::opt {

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Solves L y = x in place.
template <class Real>
void forward_solve(const std::vector<Real>& L, std::size_t n, std::vector<Real>& x) {
  for (std::size_t i = 0; i < n; ++i) {
    Real s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= L[i * n + k] * x[k];
    x[i] = s / L[i * n + i];
  }
}

// Solves L^T y = x in place.
template <class Real>
void back_solve_transposed(const std::vector<Real>& L, std::size_t n, std::vector<Real>& x) {
  for (std::size_t ii = n; ii-- > 0;) {
    Real s = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= L[k * n + ii] * x[k];
    x[ii] = s / L[ii * n + ii];
  }
}

template <class Real>
std::vector<Real> cholesky_impl(const SymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Real> L(n * n, Real(0));
  for (std::size_t j = 0; j < n; ++j) {
    Real d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= L[j * n + k] * L[j * n + k];
    if (!(d > Real(0))) throw NumericalContractError("matrix is not positive definite");
    L[j * n + j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
      L[i * n + j] = s / L[j * n + j];
    }
  }
  return L;
}

template <class Real>
struct EigenImpl {
  std::vector<Real> values;
  std::vector<std::vector<Real>> vectors;
};

// Cyclic Jacobi on the row-major symmetric matrix `a` (destroyed).
template <class Real>
EigenImpl<Real> jacobi_impl(std::vector<Real> a, std::size_t n) {
  std::vector<Real> v(n * n, Real(0));
  Real total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) total += a[i * n + j] * a[i * n + j];
  }
  total = std::sqrt(total);
  auto off_norm = [&] {
    Real s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += a[i * n + j] * a[i * n + j];
      }
    }
    return std::sqrt(s);
  };
  const Real tol = std::numeric_limits<Real>::epsilon() / 16 * total;
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= std::numeric_limits<Real>::min() + tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real apq = a[p * n + q];
        if (apq == Real(0)) continue;
        const Real app = a[p * n + p], aqq = a[q * n + q];
        const Real tau = (aqq - app) / (2 * apq);
        const Real t = (tau >= 0 ? Real(1) : Real(-1)) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const Real c = 1 / std::sqrt(1 + t * t);
        const Real s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Real akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Real apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = a[q * n + p] = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const Real vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) throw NumericalContractError("Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });
  EigenImpl<Real> out;
  for (std::size_t k : order) {
    out.values.push_back(a[k * n + k]);
    std::vector<Real> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

// b^T C0 b / b^T C1 b with extended-precision accumulation. The top vector of
// an ill-conditioned pencil has large entries of alternating sign, and plain
// double sums lose several digits to cancellation there.
double quotient(const SymMatrix& c0, const SymMatrix& c1, std::span<const double> b) {
  long double num = 0.0L, den = 0.0L;
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long double bb = static_cast<long double>(b[i]) * b[j];
      num += bb * c0(i, j);
      den += bb * c1(i, j);
    }
  }
  return static_cast<double>(num / den);
}

double scaled_residual(const SymMatrix& c0, const SymMatrix& c1, std::span<const double> b,
                       double lambda) {
  const auto a = c0.apply(b);
  const auto m = c1.apply(b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - lambda * m[i];
    s += d * d;
  }
  const double scale = c0.frobenius_norm() * norm2(b);
  return scale > 0 ? std::sqrt(s) / scale : std::sqrt(s);
}

// Gaussian elimination with partial pivoting; returns false if singular.
bool solve_dense(std::vector<double> a, std::vector<double>& x, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (a[piv * n + c] == 0.0) return false;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      std::swap(x[c], x[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      x[r] -= f * x[c];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    double s = x[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r * n + k] * x[k];
    x[r] = s / a[r * n + r];
  }
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

SymEigen jacobi_eigen(const SymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  auto e = jacobi_impl<double>(std::move(a), n);
  return SymEigen{std::move(e.values), std::move(e.vectors)};
}

std::vector<double> cholesky(const SymMatrix& m) { return cholesky_impl<double>(m); }

RayleighResult rayleigh_max(const SymMatrix& c0, const SymMatrix& c1) {
  const std::size_t n = c0.order();
  if (c1.order() != n || n == 0) throw std::invalid_argument("pencil dimensions do not match");
  // The reduction runs in extended precision: C1 is close to a Hilbert-type
  // matrix, and L^{-1} amplifies its round-off by cond(C1).
  using Real = long double;
  const auto L = cholesky_impl<Real>(c1);

  // M = L^{-1} C0 L^{-T}
  std::vector<std::vector<Real>> x(n, std::vector<Real>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Real> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = c0(i, j);
    forward_solve(L, n, col);
    for (std::size_t i = 0; i < n; ++i) x[i][j] = col[i];
  }
  std::vector<Real> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Real> row = x[i];
    forward_solve(L, n, row);
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = row[j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i * n + j] = m[j * n + i] = (m[i * n + j] + m[j * n + i]) / 2;
    }
  }
  auto eig = jacobi_impl<Real>(std::move(m), n);

  std::vector<Real> top = std::move(eig.vectors.front());
  back_solve_transposed(L, n, top);
  std::vector<double> b(top.begin(), top.end());
  auto normalize = [](std::vector<double>& w) {
    const double s = norm2(w);
    for (double& e : w) e /= s;
  };
  normalize(b);
  double lambda = quotient(c0, c1, b);
  double res = scaled_residual(c0, c1, b, lambda);

  // Inverse iteration on the original pencil cleans up the accuracy lost to
  // an ill-conditioned C1.
  for (int step = 0; step < 3 && res > 1e-13; ++step) {
    std::vector<double> shifted(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) shifted[i * n + j] = c0(i, j) - lambda * c1(i, j);
    }
    std::vector<double> z = c1.apply(b);
    if (!solve_dense(shifted, z, n)) break;
    normalize(z);
    const double lz = quotient(c0, c1, z);
    const double rz = scaled_residual(c0, c1, z, lz);
    if (!(rz < res) || lz < lambda - 1e-12 * std::abs(lambda)) break;
    b = std::move(z);
    lambda = lz;
    res = rz;
  }
  return RayleighResult{lambda, std::move(b), res};
}

}  // namespace zgap::opt
