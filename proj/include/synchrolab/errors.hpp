#pragma once

#include <stdexcept>
#include <string>

namespace synchrolab {

// Error categories map one-to-one onto CLI exit codes 1..4.

/// Malformed input: bad indices, mismatched sizes, syntax errors.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside an operation's domain (e.g. not synchronizing).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A subset-exhaustive operation was asked to exceed the configured state cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A proven bound was violated. Either a bug or a counterexample; never swallowed.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : InputError {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace synchrolab
