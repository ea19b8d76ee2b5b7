#include "lattopt/instances.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace lattopt {

InstanceBundle example1() {
  // 3996x - 4y <= 3993, -(3996x - 4y) <= -3991, 2x <= 5, -2x <= -1.
  linalg::IntMat A = {{3996, -4}, {-3996, 4}, {2, 0}, {-2, 0}};
  std::vector<BigInt> b = {3993, -3991, 5, -1};
  InstanceBundle out;
  out.polytope = Polytope(2, std::move(A), std::move(b));
  out.objective = Polynomial(2, {{1, {3, 1}}});
  out.metadata.name = "example1";
  out.metadata.note =
      "thin sliver with lattice points (1,1) and (2,1000); maximize x^3 y";
  out.metadata.known_optimum = BigInt(8000);
  out.metadata.nonnegative = true;  // x > 0 on P and both y values positive
  out.metadata.maximize = true;
  return out;
}

InstanceBundle nvs04() {
  linalg::IntMat A = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  std::vector<BigInt> b = {0, 200, 0, 200};
  // g = 100 * [ 100*(1/2 + i2 - (3/5 + i1)^2)^2 + (2/5 - i1)^2 ], expanded:
  // g = 212 + 2800 i2 - 3440 i1 + 11700 i1^2 + 10000 i2^2 - 24000 i1 i2
  //     + 24000 i1^3 - 20000 i1^2 i2 + 10000 i1^4.
  // Maximization objective: 16500000000000 - g (the 165*10^9 bound in the
  // x100 scale), which is nonnegative over the box.
  const BigInt flip("16500000000000");
  std::vector<Monomial> ms = {
      {flip - 212, {0, 0}},  {BigInt(-2800), {0, 1}},  {BigInt(3440), {1, 0}},
      {BigInt(-11700), {2, 0}}, {BigInt(-10000), {0, 2}}, {BigInt(24000), {1, 1}},
      {BigInt(-24000), {3, 0}}, {BigInt(20000), {2, 1}},  {BigInt(-10000), {4, 0}},
  };
  InstanceBundle out;
  out.polytope = Polytope(2, std::move(A), std::move(b));
  out.objective = Polynomial(2, std::move(ms));
  out.metadata.name = "nvs04";
  out.metadata.note =
      "box [0,200]^2; original min objective 100*(1/2 + i2 - (3/5 + i1)^2)^2 + "
      "(2/5 - i1)^2 has optimum 0.72 at (1,2); stored objective is the x100 "
      "integer scale flipped to maximization: 16500000000000 - g, optimum "
      "16500000000000 - 72; in the original scale that reads 165e9 - 0.72 = "
      "164999999999.28";
  out.metadata.known_optimum = BigInt("16499999999928");
  out.metadata.nonnegative = true;  // max of g over the box stays below the flip constant
  out.metadata.maximize = true;
  return out;
}

InstanceBundle an1_instance(unsigned long a, unsigned long b, unsigned long c) {
  if (a == 0 || b == 0 || c == 0)
    throw std::invalid_argument("an1_instance: parameters must be positive");
  if (c <= 1) throw std::invalid_argument("an1_instance: empty x-range (need c >= 2)");
  BigInt ab(a), bb(b), cb(c);
  // 1 <= x <= c-1, 1-a <= b*y <= (c-1)^2 - a.
  linalg::IntMat A = {{-1, 0}, {1, 0}, {0, -bb}, {0, bb}};
  std::vector<BigInt> rhs = {-1, cb - 1, ab - 1, (cb - 1) * (cb - 1) - ab};
  // (x^2 - a - b y)^2 = x^4 - 2a x^2 - 2b x^2 y + 2ab y + b^2 y^2 + a^2.
  std::vector<Monomial> ms = {
      {1, {4, 0}},          {-2 * ab, {2, 0}}, {-2 * bb, {2, 1}},
      {2 * ab * bb, {0, 1}}, {bb * bb, {0, 2}}, {ab * ab, {0, 0}},
  };
  InstanceBundle out;
  out.polytope = Polytope(2, std::move(A), std::move(rhs));
  out.objective = Polynomial(2, std::move(ms));
  out.metadata.name = "an1(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")";
  out.metadata.note =
      "minimize the quartic (x^2 - a - b y)^2; minimum 0 iff x^2 = a (mod b) "
      "for some 0 < x < c";
  out.metadata.nonnegative = true;  // a perfect square
  out.metadata.maximize = false;
  return out;
}

InstanceBundle random_instance(size_t d, unsigned degree, long radius, unsigned long seed) {
  if (d == 0) throw std::invalid_argument("random_instance: dimension must be positive");
  if (radius < 1) throw std::invalid_argument("random_instance: radius must be >= 1");
  std::mt19937_64 rng(seed);
  // Hand-rolled modulo draw keeps the stream identical across platforms
  // (std::uniform_int_distribution is implementation-defined).
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };

  linalg::IntMat A;
  std::vector<BigInt> b;
  for (size_t j = 0; j < d; ++j) {
    linalg::IntVec up(d, BigInt(0)), down(d, BigInt(0));
    up[j] = 1;
    down[j] = -1;
    A.push_back(std::move(up));
    b.push_back(radius);
    A.push_back(std::move(down));
    b.push_back(radius);
  }
  // Extra rows pass strictly through the origin's side: rhs >= 1 keeps the
  // origin interior, guaranteeing nonempty and full-dimensional.
  for (size_t i = 0; i < d; ++i) {
    linalg::IntVec row(d);
    bool nonzero = false;
    do {
      nonzero = false;
      for (size_t j = 0; j < d; ++j) {
        row[j] = draw(-3, 3);
        if (row[j] != 0) nonzero = true;
      }
    } while (!nonzero);
    A.push_back(row);
    b.push_back(draw(1, 3 * radius));
  }

  std::vector<Monomial> ms;
  long want = draw(1, 4);
  for (long i = 0; i < want; ++i) {
    std::vector<unsigned> exps(d);
    for (;;) {
      unsigned total = 0;
      for (size_t j = 0; j < d; ++j) {
        exps[j] = static_cast<unsigned>(draw(0, degree));
        total += exps[j];
      }
      if (total <= degree) break;
    }
    long coeff = draw(-9, 9);
    if (coeff == 0) coeff = 1;
    ms.push_back({BigInt(coeff), exps});
  }
  Polynomial f(d, std::move(ms));
  if (f.is_zero()) f = Polynomial::constant(d, 1);

  InstanceBundle out;
  out.polytope = Polytope(d, std::move(A), std::move(b));
  out.objective = std::move(f);
  out.metadata.name = "random(d=" + std::to_string(d) + ",D=" + std::to_string(degree) +
                      ",r=" + std::to_string(radius) + ",seed=" + std::to_string(seed) + ")";
  out.metadata.note = "seeded fuzz instance; bounded, full-dimensional, origin feasible";
  out.metadata.seed = seed;
  out.metadata.maximize = true;
  return out;
}

}  // namespace lattopt
