#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zgap/functional/gap_functional.hpp"

namespace zgap::opt {

inline constexpr std::size_t kMaxOrder = 64;

/// Dense real symmetric matrix, row-major. Symmetry is enforced on
/// construction: inputs asymmetric beyond round-off are rejected, and the
/// stored matrix is exactly symmetric.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n = 0);
  static SymMatrix identity(std::size_t n);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix from_rational(const functional::RationalMatrix& m);

  std::size_t order() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Sets (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v);

  std::vector<double> apply(std::span<const double> x) const;
  double quadratic(std::span<const double> x) const;
  double frobenius_norm() const;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

}  // namespace zgap::opt
