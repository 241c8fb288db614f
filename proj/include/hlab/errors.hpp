#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

// Syntax error in a program, query, or symbol list; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// A caller violated a documented precondition of an operation.
class PremiseError : public std::runtime_error {
 public:
  explicit PremiseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two routes that must agree by the underlying theory produced different
// definite verdicts. Carries a reproduction bundle in the message.
class InternalInconsistencyError : public std::logic_error {
 public:
  explicit InternalInconsistencyError(const std::string& msg)
      : std::logic_error(msg) {}
};

}  // namespace hlab
