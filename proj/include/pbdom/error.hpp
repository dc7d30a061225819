#pragma once

#include <stdexcept>
#include <string>

namespace pbdom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input structure: cyclic covers, duplicate ids, missing least element.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a precondition (empty subset, not a lattice, bad partition).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a desk-scale size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A post-hoc verification failed. These mark places where a theorem being
/// checked does not hold for the given input.
class LogicError : public Error {
 public:
  using Error::Error;
};

}  // namespace pbdom
