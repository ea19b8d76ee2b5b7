#pragma once

#include <vector>

#include "lattopt/polytope.hpp"
#include "lattopt/rational.hpp"

namespace lattopt {

// Integer-coefficient monomial c * x^alpha.
struct Monomial {
  BigInt coeff;
  std::vector<unsigned> exponents;
};

// Sparse integer polynomial over d variables. Canonical form: monomials with
// distinct exponent vectors, sorted lexicographically by exponents, no zero
// coefficients.
struct Polynomial {
  size_t dim = 0;
  std::vector<Monomial> monomials;

  Polynomial() = default;
  Polynomial(size_t d, std::vector<Monomial> ms);

  static Polynomial zero(size_t d) { return Polynomial(d, {}); }
  static Polynomial constant(size_t d, const BigInt& c);

  size_t monomial_count() const { return monomials.size(); }  // r
  BigInt max_abs_coeff() const;                               // C
  unsigned total_degree() const;                              // D

  bool is_zero() const { return monomials.empty(); }
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const BigInt& c);
Polynomial poly_shift_constant(const Polynomial& a, const BigInt& c);  // a + c

// k-th power by repeated multiplication; poly_pow(f, 0) = 1.
Polynomial poly_pow(const Polynomial& f, unsigned k);

BigInt evaluate(const Polynomial& f, const LatticePoint& x);
BigRat evaluate(const Polynomial& f, const RationalPoint& x);

// f(x0 + B t): exact substitution of an integer affine map, producing a
// polynomial in the t variables (dimension = number of columns of B).
Polynomial substitute_affine(const Polynomial& f, const LatticePoint& x0,
                             const std::vector<LatticePoint>& basis);

}  // namespace lattopt
