#pragma once

#include <stdexcept>
#include <string>

namespace asc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class NotFiniteDimensional : public Error {
 public:
  using Error::Error;
};

class MalformedRelation : public Error {
 public:
  using Error::Error;
};

class UncertifiedIndecomposable : public Error {
 public:
  using Error::Error;
};

class NotGenerator : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace asc
