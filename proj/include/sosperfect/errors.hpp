#pragma once

#include <stdexcept>

namespace sosperfect {

/// Thrown when an exact routine is asked to run past its documented size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a numerical routine fails (non-convergence, NaN).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sosperfect
