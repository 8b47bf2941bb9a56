#pragma once

#include <cstdint>
#include <string_view>

namespace zgap::field {

/// Quadratic field data attached to a fundamental discriminant D.
struct FieldParams {
  long discriminant = 0;
  long modulus = 0;  // q
  bool real = false;
};

enum class LocalFactorClass { split, inert, ramified };

std::string_view to_string(LocalFactorClass c);

/// D = 1 (mod 4) squarefree, or D = 4m with m = 2, 3 (mod 4) squarefree;
/// D not in {0, 1}.
bool is_fundamental_discriminant(long D);

/// Validated FieldParams; throws std::invalid_argument otherwise.
FieldParams make_field(long D);

/// q = 4|D| when D = 2 (mod 4), |D| otherwise. Taken literally for any D != 0;
/// the first branch never fires for a fundamental discriminant.
long modulus_q(long D);

/// Kronecker symbol (D/n) for n >= 1. Throws std::invalid_argument for a
/// non-fundamental D or n < 1.
int kronecker_chi(long D, long n);

LocalFactorClass classify_prime(long D, long p);

/// a_r(p^m): the coefficient of p^{-ms} in the local factor of zeta_K(s)^r.
std::uint64_t local_coefficient(LocalFactorClass c, unsigned r, unsigned m);

/// L(1, chi_D) to within `tolerance`. Full periods are summed directly and the
/// tail is closed with the asymptotic digamma expansion (the character sum over
/// a period vanishes, which is what makes the tail expansion converge).
/// Throws std::runtime_error if the tolerance is not reached within the cap.
double dirichlet_L1(long D, double tolerance = 1e-12);

/// L(2, chi_D); same scheme with the trigamma tail.
double dirichlet_L2(long D, double tolerance = 1e-14);

enum class EulerRenormalization {
  /// Factor out L(1,chi)^{2r^2}; local residuals are 1 + O(p^-2).
  first_order,
  /// Additionally factor out zeta(2)^s * L(2,chi)^t; residuals are 1 + O(p^-3).
  second_order,
};

/// A_r = prod_p (1 - 1/p)^{2r^2} sum_m a_r(p^m)^2 / p^m, with the primes above
/// prime_cut handled by the closed-form renormalization factors.
double arithmetic_factor(long D, unsigned r, long prime_cut,
                         EulerRenormalization scheme = EulerRenormalization::second_order);

struct DensityStats {
  double log_height = 0.0;  // log(sqrt|D| T / (4 pi^2))
  double zero_count_main = 0.0;
  double avg_gap = 0.0;
};

/// Main terms of the zero-counting function at height T >= 2.
DensityStats density_stats(double T, long D);

}  // namespace zgap::field
