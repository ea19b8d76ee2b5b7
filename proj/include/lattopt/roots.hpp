#pragma once

#include "lattopt/rational.hpp"

namespace lattopt {

// Exact bracket around q^(1/k): lower <= q^(1/k) <= upper with
// lower^k <= q <= upper^k and upper - lower <= the precision it was built
// with. radicand/k are kept so callers can re-verify or refine.
struct RootInterval {
  BigRat lower;
  BigRat upper;
  BigRat radicand;
  unsigned k = 1;

  bool is_exact() const { return lower == upper; }
  BigRat width() const { return upper - lower; }
};

// floor(q^(1/k)) for q >= 0, k >= 1, via exact integer root extraction.
BigInt integer_kth_root_floor(const BigRat& q, unsigned k);

// Smallest integer n with n^k >= q (q >= 0), i.e. ceil(q^(1/k)).
BigInt integer_kth_root_ceil(const BigRat& q, unsigned k);

// If q = (a/b)^k exactly, returns [r, r]; otherwise an interval of width
// 1/S <= precision from a single scaled integer-root extraction.
RootInterval rational_kth_root_interval(const BigRat& q, unsigned k, const BigRat& precision);

}  // namespace lattopt
