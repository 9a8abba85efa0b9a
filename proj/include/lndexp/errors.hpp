#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lndexp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values live in different polynomial rings (variable lists differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A component list has the wrong length for the ring.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exponent or degree arithmetic left the machine-word range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iteration cap was reached before D^m(p) vanished, so local
/// nilpotency could not be certified on this input.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, unsigned long cap) : Error(what), cap_(cap) {}
  unsigned long cap() const { return cap_; }

 private:
  unsigned long cap_;
};

/// The brute-force minimal polynomial is not a power of (T - 1).
class NotUnipotent : public Error {
 public:
  using Error::Error;
};

/// Syntax error; carries a 1-based position and the expected-token set.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : Error(what), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& what, std::size_t position, std::string name)
      : ParseError(what, position, "known variable"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NonIntegerExponent : public ParseError {
 public:
  NonIntegerExponent(const std::string& what, std::size_t position)
      : ParseError(what, position, "nonnegative integer exponent") {}
};

}  // namespace lndexp
