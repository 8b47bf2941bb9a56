#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zgap {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using BigRational = mpq_class;
using BigInt = mpz_class;

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const BigRational& value);

/// Parses "p/q" or a bare integer. Decimal notation is rejected so that no
/// value ever passes through binary floating point.
BigRational parse_rational(std::string_view text);

/// Exact conversion of a finite double.
BigRational from_double(double value);

double to_double(const BigRational& value);

}  // namespace zgap
