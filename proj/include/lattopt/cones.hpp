#pragma once

#include <vector>

#include "lattopt/polytope.hpp"
#include "lattopt/rational.hpp"

namespace lattopt {

// Simplicial cone with sign and half-open facet marks. rays are linearly
// independent primitive integer vectors; open_facet[i] refers to the facet
// spanned by the rays other than rays[i] (points whose i-th ray coefficient
// is zero are excluded when the mark is set).
struct SimplicialCone {
  RationalPoint apex;
  std::vector<LatticePoint> rays;
  int sign = 1;
  std::vector<bool> open_facet;
};

// |det| of the ray matrix: number of lattice points in the half-open
// fundamental parallelepiped; 1 means unimodular.
BigInt cone_index(const SimplicialCone& c);

// One addend of a short rational generating function:
// sign * z^u / prod_j (1 - z^{rays[j]}).
struct ConeTerm {
  int sign = 1;
  LatticePoint u;
  std::vector<LatticePoint> rays;
};

struct RationalFunctionSum {
  size_t dim = 0;
  std::vector<ConeTerm> terms;
};

// Triangulates a pointed full-dimensional cone given by generators into
// simplicial half-open pieces that partition it exactly (marks chosen by a
// deterministic generic tie-breaking vector; all signs +1).
std::vector<SimplicialCone> triangulate(const Cone& cone);

// Signed decomposition into unimodular half-open cones. The signed sum of
// the pieces' rational generating functions equals the input's exactly;
// pointwise, indicators agree modulo cones containing lines (a recursion
// step may replace a cone by a point-reflected one with flipped sign, and
// such pairs cancel only in the rational-function calculus). The half-open
// marks guarantee that no lower-dimensional pointed leftovers arise, since
// those would not cancel. Shortest-vector steps search the Minkowski
// coefficient box exhaustively.
std::vector<SimplicialCone> barvinok_decompose(const SimplicialCone& c);

// Brion pipeline for a bounded full-dimensional polytope: tangent cones at
// all vertices, triangulated, decomposed, each unimodular piece turned into
// a ConeTerm whose u is the unique lattice point of the shifted half-open
// fundamental parallelepiped. Throws on empty, unbounded, or
// lower-dimensional input.
RationalFunctionSum generating_function(const Polytope& p);

// |P cap Z^d| by specialization at z = 1 along a generic direction.
BigInt specialize_count(const RationalFunctionSum& g);

// First moment-curve direction (1, t, t^2, ...) not orthogonal to any ray.
std::vector<BigInt> generic_direction(size_t dim, const std::vector<const LatticePoint*>& rays);

namespace detail {

// Retry signal raised when the tie-breaking vector hits a facet hyperplane.
struct DegenerateTieBreak : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<SimplicialCone> triangulate_with(const Cone& cone, const LatticePoint& y);
void decompose_with(const RationalPoint& apex, const std::vector<LatticePoint>& rays, int sign,
                    const LatticePoint& y, std::vector<SimplicialCone>& out);

// Unique lattice point of apex + half-open parallelepiped of a unimodular
// cone (the z^u numerator exponent for its generating function term).
LatticePoint unimodular_apex_point(const SimplicialCone& c);

}  // namespace detail

}  // namespace lattopt
