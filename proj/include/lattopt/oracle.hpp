#pragma once

#include <optional>
#include <vector>

#include "lattopt/polynomial.hpp"
#include "lattopt/polytope.hpp"

namespace lattopt {

// Thrown when a brute-force scan would exceed its cell budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultOracleBudget = 20'000'000;

// Lattice points of P in lexicographic order, found by scanning the integer
// bounding box and testing membership. budget bounds the number of box cells
// scanned. Works for lower-dimensional P; empty P yields an empty list.
std::vector<LatticePoint> enumerate_lattice_points(const Polytope& p,
                                                   long budget = kDefaultOracleBudget);

// sum over P cap Z^d of f(x)^k, by direct enumeration.
BigInt brute_power_sum(const Polytope& p, const Polynomial& f, unsigned k,
                       long budget = kDefaultOracleBudget);

struct BruteOptimum {
  BigInt value;
  LatticePoint argopt;  // lexicographically least attaining point
};

// nullopt when P has no lattice points.
std::optional<BruteOptimum> brute_max(const Polytope& p, const Polynomial& f,
                                      long budget = kDefaultOracleBudget);
std::optional<BruteOptimum> brute_min(const Polytope& p, const Polynomial& f,
                                      long budget = kDefaultOracleBudget);

}  // namespace lattopt
