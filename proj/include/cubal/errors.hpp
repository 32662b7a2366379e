#pragma once

#include <stdexcept>
#include <string>

namespace cubal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table, matrix or file does not have the expected shape or content.
class MalformedInput : public Error {
public:
  using Error::Error;
};

/// Operands of a binary operation were built over sets of different sizes.
class SizeMismatch : public Error {
public:
  using Error::Error;
};

/// The request exceeds a hard computational budget (enumeration size, subset scans).
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace cubal
