#pragma once

#include <stdexcept>

namespace lattopt {

// The feasible region has no points (no vertices / empty intersection).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The feasible region is unbounded; counts and maxima are undefined.
struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The feasible region is not full-dimensional (or otherwise violates a
// v1 interface precondition that callers are expected to pre-reduce).
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lattopt
