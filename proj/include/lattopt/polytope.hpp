#pragma once

#include <vector>

#include "lattopt/linalg.hpp"
#include "lattopt/rational.hpp"

namespace lattopt {

using RationalPoint = std::vector<BigRat>;
using LatticePoint = std::vector<BigInt>;

// Rational convex polytope in H-representation A x <= b with integral rows.
// Construction clears rational input rows to integers (row-wise lcm).
struct Polytope {
  size_t dim = 0;
  linalg::IntMat A;
  std::vector<BigInt> b;

  Polytope() = default;
  Polytope(size_t d, linalg::IntMat A_, std::vector<BigInt> b_);

  // Clears denominators row by row.
  static Polytope from_rational_rows(size_t d, const linalg::RatMat& A, const linalg::RatVec& b);
};

// Pointed polyhedral cone: apex plus integer generators (primitive).
struct Cone {
  RationalPoint apex;
  std::vector<LatticePoint> generators;
};

// Integer coordinate box [lo_i, hi_i].
struct Box {
  LatticePoint lo, hi;
};

// All vertices (basic feasible solutions), deduplicated, sorted
// lexicographically. Works for lower-dimensional P as well; empty result
// means P is empty (bounded polyhedra always have a vertex).
std::vector<RationalPoint> vertices(const Polytope& p);

// True when the recession cone {A x <= 0} is {0}.
bool is_bounded(const Polytope& p);

// True when the affine hull of the vertex set is all of R^d.
bool is_full_dimensional(const Polytope& p);
bool is_full_dimensional(const Polytope& p, const std::vector<RationalPoint>& verts);

bool contains(const Polytope& p, const RationalPoint& x);
bool contains_lattice(const Polytope& p, const LatticePoint& x);

// Tangent cone at a vertex: apex v, generators = extreme rays of the cone of
// feasible directions (primitive, sorted lexicographically). v must be a
// vertex of P.
Cone tangent_cone(const Polytope& p, const RationalPoint& v);

// Smallest integer box containing P: floor of the per-coordinate minimum,
// ceiling of the maximum (outward rounding, so P is inside the box).
// Throws for empty or unbounded P.
Box bounding_box(const Polytope& p);

// Semi-dilation by factor n >= 1 on the non-continuous coordinates: rows
// a.x <= b become n*a_I.x_I + a_C.x_C <= n*b, where I are the coordinates
// with is_continuous false. Encodes scaling the continuous block by 1/n.
Polytope semi_dilate(const Polytope& p, const BigInt& n, const std::vector<bool>& is_continuous);

// P with box rows appended (lo_i <= x_i <= hi_i).
Polytope intersect_with_box(const Polytope& p, const Box& box);

}  // namespace lattopt
