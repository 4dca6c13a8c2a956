#pragma once

#include <stdexcept>
#include <string>

namespace indcut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, vertex-list or decomposition text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A caller broke an operation's precondition. The message names a witness where one exists.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The structural parameter supplied to an FPT solver is smaller than the instance needs.
/// Distinct from a "no" answer.
class ParameterTooSmall : public Error {
 public:
  using Error::Error;
};

/// A self-check failed; signals a bug, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace indcut
