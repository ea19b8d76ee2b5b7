#pragma once

#include <optional>
#include <vector>

#include "lattopt/rational.hpp"

namespace lattopt {
namespace linalg {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<BigRat>;
using RatMat = std::vector<RatVec>;

BigInt det(const IntMat& m);  // square

// Solves A x = b exactly for square nonsingular A; nullopt if singular.
std::optional<RatVec> solve(const IntMat& A, const RatVec& b);

int rank(const RatMat& m);
int rank_int(const IntMat& m);

// Divides out the gcd of the entries; sign convention: first nonzero > 0.
// Zero vectors pass through unchanged.
IntVec primitive(IntVec v);

// Divides out the gcd of the entries, preserving orientation. Use for rays
// and other direction vectors where a sign flip would change the geometry.
IntVec primitive_directed(IntVec v);

// One-dimensional integer kernel of a (d-1) x d matrix of rank d-1, returned
// primitive. nullopt if the rank condition fails.
std::optional<IntVec> kernel_vector(const IntMat& m);

// Integer solution structure of E x = e: some solution x0 in Z^d plus a basis
// of the integer kernel lattice (columns of a unimodular transform). nullopt
// when no integer solution exists. E need not have full row rank, but the
// system must be consistent over Q (inconsistent systems also yield nullopt).
struct IntAffineSolution {
  IntVec x0;
  std::vector<IntVec> kernel;  // basis vectors, each length d
};
std::optional<IntAffineSolution> solve_integer_affine(const IntMat& E, const IntVec& e);

BigRat dot(const RatVec& a, const RatVec& b);
BigInt dot_int(const IntVec& a, const IntVec& b);

}  // namespace linalg
}  // namespace lattopt
