#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "lattopt/cones.hpp"
#include "lattopt/polynomial.hpp"
#include "lattopt/rational.hpp"

namespace lattopt {

// One addend of an operated generating function:
// coeff * z^u / prod_j (1 - z^{rays[j]})^{mults[j]}.
// Applying Euler operators preserves the single-monomial numerator shape, so
// this closed form suffices for the whole pipeline.
struct GeneralizedTerm {
  BigInt coeff;
  LatticePoint u;
  std::vector<LatticePoint> rays;  // distinct, sorted lexicographically
  std::vector<unsigned> mults;     // parallel to rays, all >= 1
};

struct GeneralizedSum {
  size_t dim = 0;
  std::vector<GeneralizedTerm> terms;  // canonical order, zero coeffs dropped
};

// Wraps a plain short-rational-function sum: coefficient = sign, all
// denominator multiplicities 1.
GeneralizedSum lift(const RationalFunctionSum& g);

// z_i d/dz_i applied termwise: z^u picks up factor u_i, and each denominator
// factor contributes a term with its multiplicity incremented and the
// numerator shifted by its ray. Like terms are merged.
GeneralizedSum apply_euler_operator(const GeneralizedSum& g, size_t var);

// c * x^e as a differential operator: Euler operator for each variable
// applied exponent-many times, lowest variable index first (they commute; the
// order fixes the evaluation path deterministically), then every coefficient
// scaled by c.
GeneralizedSum apply_monomial(const GeneralizedSum& g, const Monomial& mono);

// f(z_1 d/dz_1, ..., z_d d/dz_d) applied to g, monomial by monomial in f's
// canonical order.
GeneralizedSum apply_polynomial(const GeneralizedSum& g, const Polynomial& f);

// Value at z = (1,...,1) by exact specialization along a generic direction:
// substitutes z = e^{lambda s} and extracts the constant Laurent
// coefficient. Sums of lattice-point evaluations, so callers asserting
// integrality should use rat_num after is_integer.
BigRat specialize_at_one(const GeneralizedSum& g);

// Incremental ladder S_k = specialize(f(z d/dz)^k applied to gf), k = 1, 2,
// ... Within one simplicial term the rays never change and the numerator
// exponent is pinned to the multiplicities (u = u0 + sum_j (m_j - 1) v_j),
// so the state per term is just multiplicity-vector -> coefficient; that
// makes deep ladders far cheaper than chaining the generic operators above,
// which this engine is cross-checked against in tests.
class PowerEngine {
 public:
  PowerEngine(const RationalFunctionSum& gf, Polynomial objective);

  const BigInt& count() const { return count_; }  // S_0 = number of points
  const BigRat& sum(unsigned k);     // S_k, caching every rung 1..k
  const BigRat& sum_at(unsigned k);  // S_k alone; skips intermediate evaluations

 private:
  // Multiplicity vectors are packed 16 bits per ray into one key; with r <= 4
  // rays (r = dim after unimodular decomposition) and multiplicities bounded
  // by k * deg f + 1 this never overflows in any supported configuration.
  using State = std::unordered_map<std::uint64_t, BigInt>;

  struct Block {
    std::vector<LatticePoint> rays;  // distinct, sorted; never mutated
    LatticePoint u0;                 // numerator exponent at all mults = 1
    std::vector<BigInt> c;           // <lambda, ray_j>, all nonzero
    BigInt b;                        // <lambda, u0> - sum_j c_j
    State state;                     // packed mults -> coefficient
  };

  void step();              // state := objective(z d/dz) state
  BigRat evaluate() const;  // specialize the current state at z = 1

  size_t dim_ = 0;
  Polynomial objective_;
  std::vector<Block> blocks_;
  LatticePoint lambda_;
  BigInt count_;
  unsigned steps_ = 0;
  std::map<unsigned, BigRat> sums_;
};

}  // namespace lattopt
