#pragma once

#include <stdexcept>
#include <string>

namespace sunfactor {

// Malformed input: bad graph6, out-of-range vertex, self-loop, unknown family.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation would exceed its configured size or enumeration bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sunfactor
