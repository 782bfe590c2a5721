#pragma once

#include <stdexcept>
#include <string>

namespace sperner {

/// Malformed QDIMACS or descriptor text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Formula or parameter values that violate a precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point, square, or region outside the instance domain.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The instance does not behave like a valid Brouwer/Sperner instance
/// (no exit edge, walk leaves the domain, ambiguous triangle arc).
class MalformedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sperner
