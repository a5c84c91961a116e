#pragma once

#include <stdexcept>
#include <string>

namespace vkt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input (braid text, CSV rows, CLI arguments).
struct ParseError : Error {
  using Error::Error;
};

// A configured cap (crossing count, matrix size) was exceeded.  Raised
// instead of ever returning a truncated or approximate value.
struct ResourceLimitError : Error {
  using Error::Error;
};

// An internal cross-check failed: polynomial parity, redundancy between
// the four polynomials, system consistency, integrality of a solution.
struct ConsistencyError : Error {
  using Error::Error;
};

// Operation defined for knots only was fed a multi-component closure.
struct NotAKnotError : Error {
  using Error::Error;
};

}  // namespace vkt
