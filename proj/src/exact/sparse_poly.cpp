#include "zgap/exact/sparse_poly.hpp"

#include <string>

namespace zgap::exact {

SparsePoly SparsePoly::constant(const BigRational& c) { return term(Monomial{}, c); }

SparsePoly SparsePoly::variable(Var v) { return term(Monomial::variable(v), BigRational(1)); }

SparsePoly SparsePoly::term(const Monomial& m, const BigRational& c) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

unsigned SparsePoly::degree() const {
  // Graded order: the last key has the largest total degree.
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

BigRational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const BigRational& c) {
  BigRational value(c);
  value.canonicalize();  // GMP arithmetic and equality assume canonical form
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (inserted) return;
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) {
  *this = multiply(other);
  return *this;
}

SparsePoly SparsePoly::multiply(const SparsePoly& other, unsigned degree_guard) const {
  if (is_zero() || other.is_zero()) return {};
  const unsigned deg = degree() + other.degree();
  if (deg > degree_guard) {
    throw DegreeGuardError("polynomial product of degree " + std::to_string(deg) +
                           " exceeds degree guard " + std::to_string(degree_guard));
  }
  SparsePoly out;
  BigRational prod;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned k, unsigned degree_guard) const {
  SparsePoly out = constant(BigRational(1));
  for (unsigned i = 0; i < k; ++i) out = out.multiply(*this, degree_guard);
  return out;
}

BigRational SparsePoly::evaluate(std::span<const BigRational, kNumVars> point) const {
  BigRational sum(0);
  for (const auto& [m, c] : terms_) {
    BigRational t = c;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      for (unsigned e = m.exponent(v); e > 0; --e) t *= point[v];
    }
    sum += t;
  }
  return sum;
}

SparsePoly expand_product(std::span<const SparsePoly> factors, unsigned degree_guard) {
  SparsePoly out = SparsePoly::constant(BigRational(1));
  for (const auto& f : factors) out = out.multiply(f, degree_guard);
  return out;
}

}  // namespace zgap::exact
