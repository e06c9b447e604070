#pragma once

#include <stdexcept>
#include <string>

namespace lpcusp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad cocycle, non-normal subgroup, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but lies outside what the library can decide.
class NotSupported : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (group order, matrix dimension) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lpcusp
