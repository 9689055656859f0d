#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidkit {

// Base of every error thrown by the library. The CLI maps these to exit 2.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A vertex index outside [0, n).
class OutOfRangeError : public Error {
  public:
    using Error::Error;
};

// An edge (v, v); relations handled here are irreflexive.
class LoopError : public Error {
  public:
    using Error::Error;
};

// Mismatched sizes: bit vector length, component sizes, structure sizes.
class ArityError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Witness set does not contain its vertex or exceeds the size bound.
class WitnessError : public Error {
  public:
    using Error::Error;
};

// Codomain too small for the witness, or a request beyond a brute-force cap.
class BoundError : public Error {
  public:
    using Error::Error;
};

class SchemeError : public Error {
  public:
    using Error::Error;
};

}  // namespace rigidkit
