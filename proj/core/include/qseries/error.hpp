#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Raised when an operation's precondition is violated by its arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation runs out of numerical headroom before it can
/// decide its result (PSLQ exhaustion, digit extraction without enough digits).
class PrecisionTooLow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qseries
