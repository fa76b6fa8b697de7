#pragma once

#include <stdexcept>
#include <string>

namespace bicolor {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collinear triples, angular ties or duplicate points where general
// position is required.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class PointInsideHull : public Error {
 public:
  using Error::Error;
};

// Opposite-colored endpoints forming a special configuration; no 1-plane
// alternating path with those endpoints is constructed.
class SpecialConfiguration : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// A construction step met a situation its case analysis rules out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bicolor
