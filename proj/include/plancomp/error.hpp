#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plancomp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A value violates a structural invariant (undeclared atom, duplicate
/// operator name, unresolvable plan step, cyclic circuit, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong source formalism,
/// non-Boolean domain for a Boolean-only normalization, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (atom count, model enumeration) was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace plancomp
