#pragma once

#include <stdexcept>

namespace sigmakl {

/// A mathematical identity that must hold did not. The CLI maps these to exit code 3.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigmakl
