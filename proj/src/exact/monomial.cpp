#include "zgap/exact/monomial.hpp"

#include <stdexcept>

namespace zgap::exact {

Monomial::Monomial(const Exponents& exponents) {
  std::uint64_t degree = 0;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    if (exponents[v] > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 255");
    degree += exponents[v];
    key_ |= static_cast<std::uint64_t>(exponents[v]) << (8 * (kNumVars - 1 - v));
  }
  key_ |= degree << 40;
}

Monomial Monomial::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return Monomial(e);
}

Monomial::Exponents Monomial::exponents() const {
  Exponents e{};
  for (std::size_t v = 0; v < kNumVars; ++v) e[v] = exponent(v);
  return e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Exponents e = exponents();
  for (std::size_t v = 0; v < kNumVars; ++v) e[v] += other.exponent(v);
  return Monomial(e);
}

}  // namespace zgap::exact
