#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zerolab {

// Caller passed something outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not meet its own accuracy contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request would exceed a configured memory budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed data file. Carries the 1-based line number of the offending line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zerolab
