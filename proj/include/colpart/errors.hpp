#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colpart {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (bad parameter, arity, range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole (e.g. y = 0 with negative y exponents).
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Linear system has no unique solution over the fraction field.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace colpart
