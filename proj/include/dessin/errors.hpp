#pragma once

#include <stdexcept>
#include <string>

namespace dessin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on different ground sets, or a mapping is not a bijection.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An argument violates an operation's precondition (a == b, different orbits, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The result would be an empty permutation pair.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dessin
