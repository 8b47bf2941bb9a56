#pragma once

#include "zgap/exact/big_rational.hpp"
#include "zgap/exact/monomial.hpp"
#include "zgap/exact/sparse_poly.hpp"

namespace zgap::exact {

// Integration region R (volume 1/20):
//   0 <= x, x1, x2, x3, x4 <= 1,  x + x1 + x2 <= 1,  x + x3 + x4 <= 1.
//
// For fixed x each pair (x1, x2) and (x3, x4) ranges over a triangle of side
// 1 - x, so the Dirichlet integral on each triangle followed by a Beta
// integral in x gives every monomial integral in closed form.

/// Exact integral over R of x^a x1^b x2^c x3^d x4^e:
///   b!c!/(b+c+2)! * d!e!/(d+e+2)! * a!(b+c+d+e+4)!/(a+b+c+d+e+5)!
BigRational monomial_region_integral(const Monomial& m);

/// Linear extension of monomial_region_integral.
BigRational integrate_polynomial(const SparsePoly& p);

/// Exact integral over R of  m(x, ..., x4) * u^i * v^j  where
/// u = 1 - x - x1 - x2 and v = 1 - x - x3 - x4. The triangle integrals absorb
/// the u and v powers directly (Dirichlet with three parts), so no expansion
/// of u^i v^j is needed:
///   b!c!i!/(b+c+i+2)! * d!e!j!/(d+e+j+2)! * a!(n)!/(a+n+1)!,
///   n = b+c+i+d+e+j+4.
BigRational simplex_power_integral(const Monomial& m, unsigned i, unsigned j);

}  // namespace zgap::exact
