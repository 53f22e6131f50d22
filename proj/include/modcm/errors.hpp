#pragma once

#include <stdexcept>
#include <string>

namespace modcm {

/// Input rejected by a validation rule. The message names the violated condition.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size or precision ceiling was exceeded.
class CeilingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Numeric reconstruction failed after all precision escalations.
class PrecisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An exact construction degenerated (e.g. an identically vanishing resultant).
class DegenerateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace modcm
