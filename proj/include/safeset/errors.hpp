#pragma once

#include <stdexcept>
#include <string>

namespace safeset {

/// Base class for every error the library reports to callers. The category
/// string is stable and is what the CLI prints in its machine-readable error
/// record.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

/// Malformed argument: out-of-range vertex, empty set-cover set, bad path.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("input_error", message) {}
};

/// Operation called on an input outside its domain (dp on a non-semicomplete
/// digraph, non-irreducible formula, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition_error", message) {}
};

/// Family parameters violate the construction's constraints.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message)
      : Error("parameter_error", message) {}
};

/// Request is well-formed but too large for an exhaustive method.
class RefusedError : public Error {
 public:
  explicit RefusedError(const std::string& message) : Error("refused", message) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("parse_error", "line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace safeset
