#pragma once

#include <stdexcept>
#include <string>

namespace dg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identifier does not resolve, or the graph is malformed beyond repair.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Unknown vertex, edge or cycle requested by name.
class LookupError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input that does not meet its contract
// (invalid, disconnected, not realizable, not smoothed, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// graph_to_word on a graph that is not a minimal three-level bouquet.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed user input that is not a text document (words, surface names).
class InputError : public Error {
 public:
  using Error::Error;
};

// The exhaustive oracle refuses instances whose search space is too large.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace dg
