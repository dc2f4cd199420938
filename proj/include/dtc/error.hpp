#pragma once

#include <stdexcept>
#include <string>

namespace dtc {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected by a contract check (malformed data, wrong scope, stale
/// coordinates, illegal site). Maps to CLI exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Word DSL syntax or binding error, with the 1-based column of the
/// offending token.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, int column)
      : ValidationError(what + " at column " + std::to_string(column)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

}  // namespace dtc
