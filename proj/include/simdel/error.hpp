#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simdel {

/// Malformed or out-of-contract input handed to a library entry point.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that could not be parsed. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive routine refused to run because the search space is too big.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace simdel
