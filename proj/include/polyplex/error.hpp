#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyplex {

/// Base class for every failure that stems from the input data rather than
/// from misuse of the command line.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (wrong shape, n = 1, ...).
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enumeration or canonicalization would exceed its configured size guard.
class GuardError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : DomainError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace polyplex
