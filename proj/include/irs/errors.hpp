#pragma once

#include <stdexcept>
#include <string>

namespace irs {

// Thrown when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dimensions of the inputs do not agree with each other.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The combined channel estimate is zero, so MRT is undefined.
class DegenerateChannel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search would exceed the enumeration budget.
class SearchSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or out-of-range configuration; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irs
