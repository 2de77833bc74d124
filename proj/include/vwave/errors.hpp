#pragma once

#include <stdexcept>
#include <string>

namespace vwave {

/// Bad input: malformed configuration, violated preconditions, unusable data.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The numerics gave up: fixed-point non-convergence, positivity loss, blow-up.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vwave
