#pragma once

#include <stdexcept>
#include <string>

namespace fsind {

/// Base class for every failure raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the supported range, malformed input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A group exceeded the element enumeration bound.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// An element or subgroup is not contained in the ambient group.
class NotMember : public Error {
 public:
  using Error::Error;
};

/// An exact verification inside the engine failed (non-integral value,
/// broken orthogonality, ...). Never expected on correct input.
class Corruption : public Error {
 public:
  using Error::Error;
};

/// A structural statement from block theory did not hold.
class TheoryViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fsind
