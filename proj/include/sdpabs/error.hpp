#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdpabs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnsupportedAtom : public Error {
 public:
  using Error::Error;
};

/// Raised when a configurable size cap is exceeded (CNF clauses, BDD nodes,
/// cube count, brute-force predicate count).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class CnfBlowup : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class NodeLimit : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class CubeLimit : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class UnknownLeaf : public Error {
 public:
  using Error::Error;
};

}  // namespace sdpabs
