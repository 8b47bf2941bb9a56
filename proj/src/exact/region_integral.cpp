#include "zgap/exact/region_integral.hpp"

namespace zgap::exact {

namespace {

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

BigRational monomial_region_integral(const Monomial& m) { return simplex_power_integral(m, 0, 0); }

BigRational integrate_polynomial(const SparsePoly& p) {
  BigRational sum(0);
  for (const auto& [m, c] : p.terms()) sum += c * monomial_region_integral(m);
  return sum;
}

BigRational simplex_power_integral(const Monomial& m, unsigned i, unsigned j) {
  const unsigned a = m.exponent(0), b = m.exponent(1), c = m.exponent(2);
  const unsigned d = m.exponent(3), e = m.exponent(4);
  const unsigned n = b + c + i + d + e + j + 4;

  BigInt num = factorial(b) * factorial(c) * factorial(i) * factorial(d) * factorial(e) *
               factorial(j) * factorial(a) * factorial(n);
  BigInt den = factorial(b + c + i + 2) * factorial(d + e + j + 2) * factorial(a + n + 1);
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace zgap::exact
