#pragma once

#include <stdexcept>
#include <string>

namespace surplus {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text or bad parameter values (CLI exit 2).
struct UsageError : Error {
  using Error::Error;
};

struct ParseError : UsageError {
  ParseError(std::size_t line, const std::string& what)
      : UsageError("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

// The input graph does not satisfy an operation's hypotheses (CLI exit 3).
struct PreconditionError : Error {
  using Error::Error;
};

// A runtime-checked guarantee failed (CLI exit 4).
struct InvariantViolation : Error {
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace surplus
