#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace f2coh {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: syntax, unknown names, malformed presentations.
/// The CLI maps this family to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}
  ParseError(const std::string& context, const ParseError& inner)
      : InputError(context + ": " + inner.what()), position_(inner.position_) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class HomogeneityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TableMismatchError : public Error {
 public:
  TableMismatchError() : Error("polynomials over different generator tables") {}
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A query needs degrees beyond the ring's truncation bound.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A derivation does not map some relation into the ideal.
class DescentError : public Error {
 public:
  using Error::Error;
};

/// A derivation does not square to zero on the quotient.
class DifferentialError : public Error {
 public:
  using Error::Error;
};

/// A transgression image is a zero divisor in the current base.
class NzdViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace f2coh
