#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search ran past a configured element/generator bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's precondition (wrong order parity, degree mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that the theory guarantees did not hold. Always a bug or a real finding.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Group-spec text did not match the grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message +
              " (expected " + expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Group-spec text parsed but names an invalid group (bad twist, zero order, ...).
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgr
