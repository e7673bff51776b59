#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibnum {

/// Malformed or out-of-alphabet input supplied by a caller.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose track signatures do not line up.
class SignatureError : public InputError {
 public:
  using InputError::InputError;
};

/// Native-format text that could not be parsed; carries the 1-based line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Relation synthesis could not certify its own result.
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A relation expected to be functional produced zero or several outputs.
class RelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fibnum
