#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qct {

// Base class for every error the library reports. Mathematically negative
// answers are never errors; these signal bad input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidQuiver : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& name) : Error("unknown vertex '" + name + "'") {}
};

class DisconnectedQuiver : public Error {
 public:
  DisconnectedQuiver()
      : Error("quiver is disconnected; analyze each component separately") {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qct
