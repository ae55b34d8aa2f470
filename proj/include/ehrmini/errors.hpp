#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ehrmini {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us something outside an operation's contract. The CLI maps
// the whole family to exit status 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Operation is defined only for full-dimensional polytopes (or rejects a
// non-lattice intermediate result).
class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Hard input caps of the brute-force routines.
class ResourceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : PreconditionError(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An exact identity that must hold failed to hold. Exit status 3.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

// Self-check failure inside an algorithm (e.g. interpolant disagrees with a
// fresh count). Signals a bug rather than bad input; also exit status 3.
class ConsistencyError : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

}  // namespace ehrmini
