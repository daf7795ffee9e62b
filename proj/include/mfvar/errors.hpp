#pragma once

#include <stdexcept>
#include <string>

namespace mfvar {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested size exceeds what the library is willing to allocate.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Gamma evaluated at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

// An Euler factor or product vanishes where its logarithm or inverse is needed.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace mfvar
