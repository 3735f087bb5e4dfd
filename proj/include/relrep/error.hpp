#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relrep {

// Root of all library errors. Callers that only care about "something went
// wrong" catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BaseMismatch : public Error {
 public:
  BaseMismatch(std::size_t lhs, std::size_t rhs)
      : Error("base mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

// A search or closure ran into a configured resource bound. The answer is
// unknown, which is different from a negative answer.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace relrep
