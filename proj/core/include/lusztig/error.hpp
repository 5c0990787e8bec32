#pragma once

#include <stdexcept>
#include <string>

namespace lusztig {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed or out-of-range input (bad letter, illegal chamber set, rank
// mismatch, ...).
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

// A braid move was requested at a position where its pattern does not occur.
class MoveNotApplicable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "move-not-applicable"; }
};

// A point was expected to lie in a Lusztig cone and does not.
class NotInCone : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-in-cone"; }
};

// An internal invariant failed. Always an implementation bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invariant"; }
};

}  // namespace lusztig
