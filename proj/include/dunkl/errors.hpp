#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data: dimension mismatches, invalid root
// systems, unparsable rationals, non-harmonic inputs.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The inputs are well formed but a mathematical hypothesis fails, e.g. a
// Dunkl dimension in -2N for the Fischer decomposition or a Laguerre
// parameter at a Gamma pole.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// An exact division left a nonzero remainder. For a valid root system this
// never happens, so it always signals invalid geometry or a bug.
class DivisionRemainder : public Error {
 public:
  using Error::Error;
};

}  // namespace dunkl
