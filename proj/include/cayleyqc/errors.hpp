#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayleyqc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input that parses but violates a domain invariant (duplicate generator, odd n, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A size or memory limit would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition between arguments does not hold.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayleyqc
