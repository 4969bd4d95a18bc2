#pragma once

#include <stdexcept>
#include <string>

namespace oseq {

// Every failure raised by the library derives from one of the standard
// exception families so callers can catch broadly or precisely.

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Requested parameters exceed what a brute-force routine will attempt.
struct TooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An O-sequence cannot be realized in the requested number of variables.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cache entry disagrees with an existing entry for the same key.
struct CorruptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NetworkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace oseq
