#include "zgap/exact/big_rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace zgap {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

std::string to_string(const BigRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      (!den.empty() && den.front() == '-')) {
    throw std::invalid_argument("not an exact rational (expected p/q or integer): '" +
                                std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

BigRational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value has no rational form");
  return BigRational(value);
}

double to_double(const BigRational& value) { return value.get_d(); }

}  // namespace zgap
