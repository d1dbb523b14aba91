#pragma once

#include <stdexcept>
#include <string>

namespace tiltkit {

// Malformed input: bad JSON, inconsistent dimensions, relations that fail.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search (ideal closure, resolution, chain length) hit its cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation is not available over the current field.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed. Indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tiltkit
