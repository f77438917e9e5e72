#pragma once

#include <stdexcept>
#include <string>

namespace aughts {

// Bad index, dimension mismatch, out-of-guard size, malformed input.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Checked integer arithmetic overflowed.
struct ArithmeticError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// An exploration or render exceeded its configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix that is not of the M(sigma, h, eps) shape.
struct NotGroupElement : std::domain_error {
  using std::domain_error::domain_error;
};

// An internal cross-check disagreed. Never expected to fire.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aughts
