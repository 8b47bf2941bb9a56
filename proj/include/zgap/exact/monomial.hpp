#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace zgap::exact {

/// Region variables, in the order (x, x1, x2, x3, x4).
enum class Var : std::size_t { x = 0, x1 = 1, x2 = 2, x3 = 3, x4 = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr unsigned kMaxExponent = 255;
inline constexpr unsigned kDefaultDegreeGuard = 64;

/// Exponent tuple packed into one 64-bit key:
///   [total degree : 16][a : 8][b : 8][c : 8][d : 8][e : 8]
/// so that integer comparison of keys is graded-lexicographic order.
class Monomial {
 public:
  using Exponents = std::array<unsigned, kNumVars>;

  constexpr Monomial() = default;
  explicit Monomial(const Exponents& exponents);

  static Monomial variable(Var v);

  unsigned exponent(std::size_t var) const {
    return static_cast<unsigned>((key_ >> (8 * (kNumVars - 1 - var))) & 0xffu);
  }
  unsigned total_degree() const { return static_cast<unsigned>(key_ >> 40); }
  Exponents exponents() const;
  std::uint64_t key() const { return key_; }

  /// Adds exponents; throws std::overflow_error past kMaxExponent.
  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint64_t key_ = 0;
};

}  // namespace zgap::exact
