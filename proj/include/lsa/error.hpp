#pragma once

#include <stdexcept>
#include <string>

namespace lsa {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or dimension mismatch between arguments.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (JSON, CLI arguments). Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A parameter binding violates its attached constraint (e.g. mu = 1).
class ConstraintError : public InputError {
 public:
  using InputError::InputError;
};

/// Input lies outside the scope an operation decides (e.g. non-abelian
/// unimodular kernel in the Milnor normal form).
class NotInScopeError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that must hold for valid input failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace lsa

namespace lsa {

/// build_extension refused: one of the five extension conditions (1-based) fails.
class ExtensionConditionError : public Error {
 public:
  ExtensionConditionError(int condition, const std::string& what)
      : Error(what), condition_(condition) {}
  int condition() const { return condition_; }

 private:
  int condition_;
};

}  // namespace lsa
