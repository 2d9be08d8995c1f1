#pragma once

#include <stdexcept>
#include <string>

namespace adkit {

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A parameter assignment violates a catalog entry's domain (e.g. a = 0 for AD3_15).
class ConstraintViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionFailed : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace adkit
