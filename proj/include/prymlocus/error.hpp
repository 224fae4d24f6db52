#pragma once

#include <stdexcept>
#include <string>

namespace prym {

// Malformed or semantically invalid input: bad documents, dangling ids,
// violated operation preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable enumeration cap or the integer range was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Signals a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prym
