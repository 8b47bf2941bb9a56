#pragma once

#include <vector>

#include "zgap/opt/sym_matrix.hpp"

namespace zgap::opt {

/// Eigen-decomposition of a symmetric matrix; vectors[k] pairs with values[k],
/// values in descending order.
struct SymEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi rotations. Throws NumericalContractError when the
/// off-diagonal mass does not fall below round-off within the sweep cap.
SymEigen jacobi_eigen(const SymMatrix& m);

/// Lower-triangular Cholesky factor, row-major. Throws NumericalContractError
/// unless m is positive definite.
std::vector<double> cholesky(const SymMatrix& m);

struct RayleighResult {
  double lambda = 0.0;
  std::vector<double> vector;  // unit 2-norm
  /// ||C0 b - lambda C1 b|| / (||C0||_F ||b||)
  double scaled_residual = 0.0;
};

/// Largest lambda of the pencil C0 b = lambda C1 b (C1 positive definite),
/// i.e. the maximum of b^T C0 b / b^T C1 b. Reduces to L^{-1} C0 L^{-T} via
/// C1 = L L^T and diagonalizes that by Jacobi.
RayleighResult rayleigh_max(const SymMatrix& c0, const SymMatrix& c1);

inline constexpr double kResidualTolerance = 1e-10;

}  // namespace zgap::opt
