#pragma once

#include <stdexcept>
#include <string>

namespace edgedepth {

// Failure modes surfaced to CLI users. Anything not listed here is a plain
// logic_error and means a bug in this library.
enum class ErrorKind {
  DimensionMismatch,
  ExponentOverflow,
  Precondition,
  BudgetExceeded,
  Parse,
  UnknownKind,
  Unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry a 1-based line/column of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace edgedepth
