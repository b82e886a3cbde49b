#pragma once

#include <stdexcept>
#include <string>

namespace patree {

/// A value outside the domain of an operation (unknown decoration, non-hat
/// aroma entry, wrong number of free edges, index out of range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in the textual expression grammar; carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Numerical failure: non-finite state, point outside the logarithm's
/// injectivity radius, missing derivative provider.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace patree
