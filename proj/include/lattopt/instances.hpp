#pragma once

#include <optional>
#include <string>

#include "lattopt/polynomial.hpp"
#include "lattopt/polytope.hpp"

namespace lattopt {

struct InstanceMetadata {
  std::string name;
  std::string note;
  std::optional<BigInt> known_optimum;  // optimum of `objective` under `maximize`
  bool nonnegative = false;             // objective provably >= 0 on the polytope
  bool maximize = true;
  std::optional<unsigned long> seed;
};

struct InstanceBundle {
  Polytope polytope;
  Polynomial objective;
  InstanceMetadata metadata;
};

// Thin sliver {3991 <= 3996x - 4y <= 3993, 1/2 <= x <= 5/2} with objective
// x^3 y. Exactly two lattice points, (1,1) and (2,1000); optimum 8000.
InstanceBundle example1();

// Box [0,200]^2. The original minimization objective
// 100*(1/2 + i2 - (3/5 + i1)^2)^2 + (2/5 - i1)^2 (optimum 0.72 at (1,2)) is
// scaled by 100 to integer coefficients g and flipped into the maximization
// objective 165*10^11... see note: 16500000000000 - g. Optimum
// 16499999999928 = 16500000000000 - 72.
InstanceBundle nvs04();

// Quartic decision family: minimize (x^2 - a - b y)^2 over the rectangle
// 1 <= x <= c-1, 1-a <= b y <= (c-1)^2 - a. The minimum is 0 iff a is a
// quadratic residue mod b realizable by some x in (0, c). c <= 1 is an error.
InstanceBundle an1_instance(unsigned long a, unsigned long b, unsigned long c);

// Reproducible fuzz instance: box [-radius, radius]^d intersected with d
// random rows kept strictly feasible at the origin (so the result is bounded,
// full-dimensional and nonempty), plus a random objective of total degree
// <= degree with coefficients in [-9, 9].
InstanceBundle random_instance(size_t d, unsigned degree, long radius, unsigned long seed);

}  // namespace lattopt
