#pragma once

#include <map>
#include <span>
#include <stdexcept>

#include "zgap/exact/big_rational.hpp"
#include "zgap/exact/monomial.hpp"

namespace zgap::exact {

/// Raised when an expansion would exceed the configured total degree.
/// In practice this means the amplifier degree or r is misconfigured.
class DegreeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial in (x, x1, x2, x3, x4) with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is ring
/// equality. Terms iterate in graded-lexicographic order.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, BigRational>;

  SparsePoly() = default;

  static SparsePoly constant(const BigRational& c);
  static SparsePoly variable(Var v);
  static SparsePoly term(const Monomial& m, const BigRational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  unsigned degree() const;

  /// Coefficient of m (zero when absent).
  BigRational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const BigRational& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const BigRational& scalar);
  SparsePoly& operator*=(const SparsePoly& other);

  SparsePoly multiply(const SparsePoly& other, unsigned degree_guard = kDefaultDegreeGuard) const;
  SparsePoly pow(unsigned k, unsigned degree_guard = kDefaultDegreeGuard) const;

  BigRational evaluate(std::span<const BigRational, kNumVars> point) const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= BigRational(-1); }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return a.multiply(b); }
  friend SparsePoly operator*(SparsePoly a, const BigRational& s) { return a *= s; }
  friend SparsePoly operator*(const BigRational& s, SparsePoly a) { return a *= s; }

  bool operator==(const SparsePoly&) const = default;

 private:
  TermMap terms_;
};

/// Exact product of all factors (1 for an empty list).
SparsePoly expand_product(std::span<const SparsePoly> factors,
                          unsigned degree_guard = kDefaultDegreeGuard);

}  // namespace zgap::exact
