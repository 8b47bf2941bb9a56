#include "zgap/opt/sym_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace zgap::opt {

SymMatrix::SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n > kMaxOrder) throw std::invalid_argument("matrix order exceeds 64");
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      const double aij = rows[i][j], aji = rows[j][i];
      if (std::abs(aij - aji) > 1e-12 * (std::abs(aij) + std::abs(aji))) {
        throw std::invalid_argument("matrix is not symmetric");
      }
      m.set(i, j, 0.5 * (aij + aji));
    }
  }
  return m;
}

SymMatrix SymMatrix::from_rational(const functional::RationalMatrix& m) {
  std::vector<std::vector<double>> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& v : m[i]) rows[i].push_back(to_double(v));
  }
  return from_rows(rows);
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

std::vector<double> SymMatrix::apply(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("dimension mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) y[i] += a_[i * n_ + j] * x[j];
  }
  return y;
}

double SymMatrix::quadratic(std::span<const double> x) const {
  const auto y = apply(x);
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += x[i] * y[i];
  return s;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

}  // namespace zgap::opt
