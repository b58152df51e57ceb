#pragma once

#include <stdexcept>
#include <string>

namespace collapse_lab {

/// Malformed files, out-of-range parameters, and violated preconditions.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search ran past its node budget before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace collapse_lab
