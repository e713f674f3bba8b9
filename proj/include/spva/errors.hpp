#pragma once

#include <stdexcept>
#include <string>

namespace spva {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A loop-algebra component fell outside the configured z-window.
class WindowOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a structural requirement (reduction axioms, parity, ...).
class InvalidData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spva
