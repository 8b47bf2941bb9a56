#pragma once

#include <stdexcept>

namespace zgap {

/// A mathematically impossible numerical state: a form that must be positive
/// definite is not, an iteration failed its accuracy contract, etc.
class NumericalContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zgap
