#pragma once

#include <stdexcept>
#include <string>

namespace orbitforge {

// Raised when an input violates an operation's precondition (bad parity,
// degenerate form, malformed symbol text, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation would exceed a documented size guard.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal postcondition fails. Always indicates a bug or a
// broken mathematical assumption, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orbitforge
