#ifndef TORSIONFORGE_ERRORS_HPP
#define TORSIONFORGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torsionforge {

/// Caller supplied an argument outside the operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix shapes do not fit the operation.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// A structural invariant of a constructed or supplied object does not hold.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace torsionforge

#endif  // TORSIONFORGE_ERRORS_HPP
