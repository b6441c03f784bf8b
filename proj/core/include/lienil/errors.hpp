#pragma once

#include <stdexcept>
#include <string>

namespace lienil {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad text forms, wrong dimensions, invalid parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands belong to different rings (different generator count,
/// different scalar field, different variable set).
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An element that the ring cannot invert was required to be a unit.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Enumeration or solver size limit exceeded.  Never silently truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A structural invariant was found broken at runtime (for instance a
/// transitive matrix whose square is not n times itself).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_context_mismatch(const std::string& what);

}  // namespace lienil
