#pragma once

#include <stdexcept>
#include <string>

namespace sullivan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixing elements or generators from different signatures, or an index
// outside the signature.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// A morphism table was asked for a generator it has no entry for.
class MissingEntry : public Error {
 public:
  using Error::Error;
};

// Caller supplied data that violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An algorithm invariant failed. Always a bug, never user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sullivan
