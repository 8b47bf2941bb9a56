#include "zgap/field/quad_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace zgap::field {

namespace {

bool is_squarefree(long n) {
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// Jacobi symbol (a/n), n odd and positive.
int jacobi(long a, long n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker_at_two(long D) {
  if (D % 2 == 0) return 0;
  const long r = mod(D, 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > UINT64_MAX) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

// Asymptotic expansions, accurate to far below double epsilon for z >= 64.
// digamma(z) - log(z) is returned so that the log term (which cancels over a
// full character period) never enters the sum.
double digamma_minus_log(double z) {
  const double z2 = 1.0 / (z * z);
  return -0.5 / z -
         z2 * (1.0 / 12 - z2 * (1.0 / 120 - z2 * (1.0 / 252 - z2 * (1.0 / 240 - z2 / 132))));
}

double trigamma(double z) {
  const double iz = 1.0 / z;
  const double z2 = iz * iz;
  return iz + 0.5 * z2 +
         iz * z2 * (1.0 / 6 - z2 * (1.0 / 30 - z2 * (1.0 / 42 - z2 * (1.0 / 30 - z2 * 5.0 / 66))));
}

enum class LOrder { one, two };

double dirichlet_L(long D, LOrder order, double tolerance) {
  const FieldParams f = make_field(D);
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const long q = f.modulus;
  std::vector<int> chi(static_cast<std::size_t>(q) + 1);
  for (long a = 1; a <= q; ++a) chi[static_cast<std::size_t>(a)] = kronecker_chi(D, a);

  constexpr long kMaxTerms = 1L << 30;
  long periods = 0;
  long double partial = 0.0L;
  auto advance_to = [&](long K) {
    for (; periods < K; ++periods) {
      const long base = periods * q;
      for (long a = 1; a <= q; ++a) {
        const int c = chi[static_cast<std::size_t>(a)];
        if (c == 0) continue;
        const long double n = static_cast<long double>(base + a);
        partial += order == LOrder::one ? c / n : c / (n * n);
      }
    }
  };
  auto estimate = [&](long K) {
    advance_to(K);
    long double tail = 0.0L;
    for (long a = 1; a <= q; ++a) {
      const int c = chi[static_cast<std::size_t>(a)];
      if (c == 0) continue;
      const double z = static_cast<double>(K) + static_cast<double>(a) / static_cast<double>(q);
      if (order == LOrder::one) {
        tail -= c * (std::log1p(static_cast<double>(a) / (static_cast<double>(q) * K)) +
                     digamma_minus_log(z));
      } else {
        tail += c * trigamma(z);
      }
    }
    tail /= order == LOrder::one ? q : static_cast<double>(q) * q;
    return static_cast<double>(partial + tail);
  };

  long K = 64;
  double previous = estimate(K);
  while (K * q <= kMaxTerms) {
    K *= 2;
    const double current = estimate(K);
    if (std::abs(current - previous) <= tolerance) return current;
    previous = current;
  }
  throw std::runtime_error("L-value tolerance not reached within iteration cap");
}

// log of sum_{m>=0} a_r(p^m)^2 X^m, via log1p of the m >= 1 part.
double log_local_sum(LocalFactorClass cls, unsigned r, double X) {
  double tail = 0.0, power = 1.0, previous = INFINITY;
  for (unsigned m = 1; m < 4096; ++m) {
    power *= X;
    const double a = static_cast<double>(local_coefficient(cls, r, m));
    const double term = a * a * power;
    if (term == 0.0) continue;  // odd powers at inert primes
    tail += term;
    if (m >= 2 && term <= previous && term <= 1e-18 * (1.0 + tail)) return std::log1p(tail);
    previous = term;
  }
  throw std::runtime_error("local m-sum did not converge");
}

// Coefficient of X^2 in the first-order residual local factor.
long second_order_coefficient(LocalFactorClass cls, unsigned r) {
  const long k = 2L * r * r;
  if (cls == LocalFactorClass::split) {
    const long a1 = static_cast<long>(local_coefficient(cls, r, 1));
    const long a2 = static_cast<long>(local_coefficient(cls, r, 2));
    return a2 * a2 - 2 * k * a1 * a1 + (2 * k) * (2 * k - 1) / 2;
  }
  const long a2 = static_cast<long>(local_coefficient(cls, r, 2));
  return a2 * a2 - k;
}

}  // namespace

std::string_view to_string(LocalFactorClass c) {
  switch (c) {
    case LocalFactorClass::split: return "split";
    case LocalFactorClass::inert: return "inert";
    case LocalFactorClass::ramified: return "ramified";
  }
  return "?";
}

bool is_fundamental_discriminant(long D) {
  if (D == 0 || D == 1) return false;
  const long r = mod(D, 4);
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  const long m = D / 4;
  const long mr = mod(m, 4);
  return (mr == 2 || mr == 3) && is_squarefree(m);
}

FieldParams make_field(long D) {
  if (!is_fundamental_discriminant(D)) {
    throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(D));
  }
  return FieldParams{D, modulus_q(D), D > 0};
}

long modulus_q(long D) {
  if (D == 0) throw std::invalid_argument("discriminant must be non-zero");
  return mod(D, 4) == 2 ? 4 * std::labs(D) : std::labs(D);
}

int kronecker_chi(long D, long n) {
  if (!is_fundamental_discriminant(D)) {
    throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(D));
  }
  if (n < 1) throw std::invalid_argument("kronecker_chi requires n >= 1");
  int result = 1;
  while (n % 2 == 0) {
    result *= kronecker_at_two(D);
    if (result == 0) return 0;
    n /= 2;
  }
  return n == 1 ? result : result * jacobi(D, n);
}

LocalFactorClass classify_prime(long D, long p) {
  switch (kronecker_chi(D, p)) {
    case 1: return LocalFactorClass::split;
    case -1: return LocalFactorClass::inert;
    default: return LocalFactorClass::ramified;
  }
}

std::uint64_t local_coefficient(LocalFactorClass c, unsigned r, unsigned m) {
  if (r == 0) throw std::invalid_argument("local_coefficient requires r >= 1");
  switch (c) {
    case LocalFactorClass::split: return binomial(m + 2 * r - 1, 2 * r - 1);
    case LocalFactorClass::inert: return m % 2 ? 0 : binomial(m / 2 + r - 1, r - 1);
    case LocalFactorClass::ramified: return binomial(m + r - 1, r - 1);
  }
  return 0;
}

double dirichlet_L1(long D, double tolerance) { return dirichlet_L(D, LOrder::one, tolerance); }

double dirichlet_L2(long D, double tolerance) { return dirichlet_L(D, LOrder::two, tolerance); }

double arithmetic_factor(long D, unsigned r, long prime_cut, EulerRenormalization scheme) {
  if (r == 0) throw std::invalid_argument("arithmetic_factor requires r >= 1");
  if (prime_cut < 0) throw std::invalid_argument("prime_cut must be non-negative");
  make_field(D);
  const double k = 2.0 * r * r;
  const bool second = scheme == EulerRenormalization::second_order;

  // Unramified residuals after the second-order step are 1 + O(p^-3):
  //   F_p = 1 + (sigma + delta chi(p)) p^-2 + ...
  const double s2 = static_cast<double>(second_order_coefficient(LocalFactorClass::split, r));
  const double i2 = static_cast<double>(second_order_coefficient(LocalFactorClass::inert, r));
  const double sigma = 0.5 * (s2 + i2);
  const double delta = 0.5 * (s2 - i2);

  double log_value = k * std::log(dirichlet_L1(D));
  if (second) {
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    log_value += sigma * std::log(zeta2) + delta * std::log(dirichlet_L2(D));
  }

  double log_product = 0.0;
  for (long p : primes_up_to(prime_cut)) {
    const int chi = kronecker_chi(D, p);
    const auto cls = chi == 1 ? LocalFactorClass::split
                     : chi == -1 ? LocalFactorClass::inert
                                 : LocalFactorClass::ramified;
    const double X = 1.0 / static_cast<double>(p);
    double term = k * std::log1p(-X) + k * std::log1p(-chi * X) + log_local_sum(cls, r, X);
    if (second) term += sigma * std::log1p(-X * X) + delta * std::log1p(-chi * X * X);
    log_product += term;
  }
  return std::exp(log_value + log_product);
}

DensityStats density_stats(double T, long D) {
  if (!(T >= 2.0)) throw std::invalid_argument("height T must be >= 2");
  if (D == 0) throw std::invalid_argument("discriminant must be non-zero");
  const double scaled = std::sqrt(static_cast<double>(std::labs(D))) * T;
  const double pi = std::numbers::pi;
  DensityStats s;
  s.log_height = std::log(scaled / (4.0 * pi * pi));
  s.zero_count_main = T * s.log_height / pi - T / pi;
  s.avg_gap = pi / std::log(scaled);
  return s;
}

}  // namespace zgap::field
