#pragma once

#include <cstddef>
#include <span>

namespace zgap::mc {

inline constexpr std::size_t kMinWirtingerPoints = 1000;

/// int |f|^2 / int |f'|^2 for samples of f on a uniform grid over [a, b] with
/// f(a) = f(b) = 0. Integrals by composite Simpson (3/8 rule on the last
/// three panels when the panel count is odd); f' by second-order central
/// differences, one-sided at the ends. Wirtinger's inequality bounds the
/// result by ((b - a) / pi)^2.
double wirtinger_ratio(std::span<const double> f, double a, double b);

/// The bound ((b - a) / pi)^2.
double wirtinger_bound(double a, double b);

}  // namespace zgap::mc
