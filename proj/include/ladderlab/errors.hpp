#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ladderlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad parameters or out-of-range ids.
struct ArgumentError : Error {
  using Error::Error;
};

// Input object breaks a structural rule (duplicate ladder vertices, invalid decomposition, ...).
struct StructuralError : Error {
  using Error::Error;
};

// An exhaustive routine was asked to run past its size guard.
struct SizeError : Error {
  using Error::Error;
};

// A construction produced something that fails its own validation.
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  std::size_t line;
};

}  // namespace ladderlab
