#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewpbw {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised for malformed presentations (zero commutation constant, unknown
/// variable names, incompatible automorphisms).
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

/// Text that does not match the scalar / polynomial / document grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The input is valid but outside the cases an operation handles (e.g. a
/// center that is not of the supported form).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace skewpbw
