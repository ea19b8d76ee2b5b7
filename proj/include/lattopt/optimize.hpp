#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lattopt/polynomial.hpp"
#include "lattopt/polytope.hpp"
#include "lattopt/rational.hpp"
#include "lattopt/roots.hpp"

namespace lattopt {

// Default width for the reported root intervals (the stopping rule itself
// never depends on it; it uses exact integer-power comparisons).
inline const BigRat kDefaultRootPrecision = make_rat(1, BigInt(1000000000));

// Normalization data: with box magnitude M, max |coefficient| C, monomial
// count r and total degree D, every point of the box satisfies
// L = -r*C*M^D <= f(x) <= r*C*M^D = U.
struct ShiftInfo {
  BigInt M;
  BigInt C;
  size_t r = 0;
  unsigned D = 0;
  BigInt L;
  BigInt U;
  bool shifted = false;  // true when the objective was replaced by f - L
};

// One rung of the bound ladder: N lattice points, exact power sum
// S_k = sum fbar(alpha)^k, and the two roots L_k = (S_k/N)^(1/k),
// U_k = S_k^(1/k) bracketing the maximum of fbar.
struct BoundsReport {
  unsigned k = 1;
  BigInt count;      // N = |P cap Z^d|
  BigInt power_sum;  // S_k, exact
  RootInterval lower;
  RootInterval upper;
  BigInt ceil_lower;   // min n with n^k * N >= S_k
  BigInt floor_upper;  // max n with n^k <= S_k
  bool converged = false;  // floor_upper - ceil_lower < 1
};

struct OptimizeResult {
  BigInt value;  // floor_upper of the last rung, un-shifted; the exact
                 // optimum when converged, else the best upper bracket
  BigInt lower;  // matching certified lower end, un-shifted
  bool converged = false;
  ShiftInfo shift;
  std::vector<BoundsReport> trace;  // every k tried, in the shifted scale
};

struct FptasResult {
  BigRat epsilon;
  unsigned k_used = 1;
  BigInt count;
  RootInterval lower_bound;  // L_{k_used} >= (1 - epsilon) * max fbar
  std::optional<LatticePoint> certified_point;
  std::optional<BigInt> certified_value;  // fbar(certified_point)
};

struct RecoveredPoint {
  LatticePoint point;
  BigInt value;
};

// One grid refinement step of the mixed-integer sequence.
struct MixedEntry {
  BigInt n;          // grid density on the continuous block
  BigInt scale;      // n^{D_c}, the denominator-clearing factor
  BigInt raw_value;  // approx optimum of the integer subproblem
  BigRat value;      // raw_value / scale, the reported grid optimum
  bool shifted = false;  // subproblem was normalized to nonnegative first
  BigInt shift_L;        // shift used on the subproblem (0 when !shifted)
  bool exact = false;    // computed by the stopping rule instead of the FPTAS
  bool converged = false;  // meaningful when exact
};

// Replaces f by the certified-nonnegative fbar = f - L unless the caller
// vouches for nonnegativity (then fbar = f, shifted = false). Throws
// InfeasibleError / UnboundedError via the bounding box when P has no
// vertices.
std::pair<Polynomial, ShiftInfo> normalize(const Polytope& p, const Polynomial& f,
                                           bool known_nonnegative);

// |P cap Z^d| with the affine hull factored out first, so lower-dimensional
// and single-point instances count correctly. Empty P yields 0; unbounded P
// throws UnboundedError.
BigInt count_lattice_points(const Polytope& p);

// N, S_k and the root brackets for one k. fbar must be nonnegative on
// P cap Z^d; a negative power sum (only possible when that is violated)
// raises invalid_argument. N = 0 raises InfeasibleError("empty feasible
// set").
BoundsReport bounds(const Polytope& p, const Polynomial& fbar, unsigned k,
                    const BigRat& precision = kDefaultRootPrecision);

// The full ladder k = 1..k_max, computed incrementally (each rung reuses the
// operated generating function of the previous one).
std::vector<BoundsReport> bounds_sequence(const Polytope& p, const Polynomial& fbar,
                                          unsigned k_max,
                                          const BigRat& precision = kDefaultRootPrecision);

// Runs the ladder until floor(U_k) - ceil(L_k) < 1 and returns floor(U_k)
// un-shifted; stops at k_max with converged = false and the best bracket
// otherwise.
OptimizeResult optimize_exact(const Polytope& p, const Polynomial& f, bool known_nonnegative,
                              unsigned k_max = 30,
                              const BigRat& precision = kDefaultRootPrecision);

// ceil((1 + 1/epsilon) * ln count), clamped to >= 1, computed exactly by
// rational bracketing of the natural logarithm.
unsigned fptas_schedule_k(const BigInt& count, const BigRat& epsilon);

// (1 - epsilon)-approximation of max f over P cap Z^d for f nonnegative on
// the feasible set (caller-asserted; negative objectives are rejected when
// detected, not silently shifted). epsilon must lie in (0, 1]. With recover
// set, bisection extracts a feasible point whose value meets the guarantee.
FptasResult fptas(const Polytope& p, const Polynomial& f, const BigRat& epsilon,
                  bool recover = false, const BigRat& precision = kDefaultRootPrecision);

// Bisection descent: halves the bounding box coordinate by coordinate
// (round-robin over coordinates of nontrivial width, midpoint floor),
// keeping the half with the larger L_k (ties to the lower half; empty halves
// never win), with k fixed from the original count. Returns a feasible
// lattice point with fbar(point) >= L_k of the original problem.
RecoveredPoint recover_point(const Polytope& p, const Polynomial& fbar, const BigRat& epsilon);

// Grid sequence for mixed problems: for each n, semi-dilates P on the
// complement of integer_vars, clears denominators of f(x, y/n) with n^{D_c}
// (D_c = max total degree in continuous variables), optimizes the integer
// subproblem, and reports value / n^{D_c}. With all variables integer the
// sequence collapses to a single optimize_exact entry. In FPTAS mode a
// possibly-negative objective is normalized first and the entry is flagged
// shifted.
std::vector<MixedEntry> mixed_integer_sequence(const Polytope& p, const Polynomial& f,
                                               const std::vector<size_t>& integer_vars,
                                               const std::vector<long>& grid,
                                               const BigRat& epsilon, bool exact_mode,
                                               bool known_nonnegative, unsigned k_max = 30);

}  // namespace lattopt
