#ifndef MIXEDSPEC_ERRORS_HPP
#define MIXEDSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixedspec {

/// Malformed graph text, alpha spec, or other user-supplied input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph file syntax or invariant violation, tagged with its 1-based line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called on an argument that violates its precondition
/// (e.g. partitioning a graph that is not a monograph).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A numeric routine failed a self-check (non-convergence, large residual,
/// imaginary residue in a real quantity).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mixedspec

#endif  // MIXEDSPEC_ERRORS_HPP
