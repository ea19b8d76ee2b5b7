#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lattopt/instances.hpp"
#include "lattopt/oracle.hpp"

using namespace lattopt;

namespace {
LatticePoint pt(std::initializer_list<long> xs) {
  LatticePoint p;
  for (long x : xs) p.emplace_back(x);
  return p;
}
}  // namespace

TEST_CASE("sliver instance facts") {
  auto ex = example1();
  CHECK(ex.polytope.dim == 2);
  CHECK(ex.metadata.maximize);
  CHECK(ex.metadata.nonnegative);
  REQUIRE(ex.metadata.known_optimum.has_value());
  CHECK(*ex.metadata.known_optimum == 8000);
  auto pts = enumerate_lattice_points(ex.polytope);
  REQUIRE(pts.size() == 2);
  CHECK(evaluate(ex.objective, pts[0]) == 1);
  CHECK(evaluate(ex.objective, pts[1]) == 8000);
}

TEST_CASE("flipped quartic box instance facts") {
  auto inst = nvs04();
  CHECK(inst.polytope.dim == 2);
  CHECK(inst.metadata.maximize);
  CHECK(inst.metadata.nonnegative);
  REQUIRE(inst.metadata.known_optimum.has_value());
  CHECK(*inst.metadata.known_optimum == BigInt("16499999999928"));
  // the recorded optimum is attained at (1, 2)
  CHECK(evaluate(inst.objective, pt({1, 2})) == BigInt("16499999999928"));
  // spot-check the expansion against the unexpanded form at a few points:
  // objective = 1.65e13 - 100*(100*(1/2 + y - (3/5 + x)^2)^2 + (2/5 - x)^2)
  auto direct = [](long x, long y) {
    BigRat ix(x), iy(y);
    BigRat inner = make_rat(BigInt(1), BigInt(2)) + iy -
                   (make_rat(BigInt(3), BigInt(5)) + ix) * (make_rat(BigInt(3), BigInt(5)) + ix);
    BigRat g = BigRat(100) * inner * inner +
               (make_rat(BigInt(2), BigInt(5)) - ix) * (make_rat(BigInt(2), BigInt(5)) - ix);
    BigRat val = BigRat(BigInt("16500000000000")) - BigRat(100) * g;
    return val;
  };
  for (auto [x, y] : {std::pair<long, long>{0, 0}, {1, 2}, {5, 30}, {200, 200}, {137, 4}}) {
    BigRat expect = direct(x, y);
    CHECK(is_integer(expect));
    CHECK(BigRat(evaluate(inst.objective, pt({x, y}))) == expect);
  }
  // count of the box is (201)^2
  CHECK(enumerate_lattice_points(inst.polytope).size() == 40401);
}

TEST_CASE("quartic family construction and guards") {
  auto an = an1_instance(1, 3, 3);
  CHECK(!an.metadata.maximize);
  CHECK(an.metadata.nonnegative);
  auto pts = enumerate_lattice_points(an.polytope);
  CHECK(pts.size() == 4);  // x in {1,2}, y in {0,1}
  for (const auto& p : pts) CHECK(evaluate(an.objective, p) >= 0);
  CHECK_THROWS_AS(an1_instance(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(an1_instance(0, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(an1_instance(1, 0, 3), std::invalid_argument);
}

TEST_CASE("fuzz builder: reproducible, bounded, origin-interior") {
  for (unsigned long seed : {0UL, 1UL, 42UL, 987654321UL}) {
    for (size_t d : {1, 2, 3}) {
      auto a = random_instance(d, 3, 5, seed);
      auto b = random_instance(d, 3, 5, seed);
      CHECK(a.polytope.A == b.polytope.A);
      CHECK(a.polytope.b == b.polytope.b);
      REQUIRE(a.objective.monomials.size() == b.objective.monomials.size());
      for (size_t i = 0; i < a.objective.monomials.size(); ++i) {
        CHECK(a.objective.monomials[i].coeff == b.objective.monomials[i].coeff);
        CHECK(a.objective.monomials[i].exponents == b.objective.monomials[i].exponents);
      }
      CHECK(a.metadata.seed == seed);
      CHECK(is_bounded(a.polytope));
      CHECK(is_full_dimensional(a.polytope));
      CHECK(contains_lattice(a.polytope, LatticePoint(d, BigInt(0))));
      CHECK(a.objective.dim == d);
      CHECK(a.objective.total_degree() <= 3);
    }
  }
  // different seeds disagree somewhere
  auto x = random_instance(2, 3, 5, 7);
  auto y = random_instance(2, 3, 5, 8);
  bool differ = x.polytope.A != y.polytope.A || x.polytope.b != y.polytope.b ||
                x.objective.monomials.size() != y.objective.monomials.size();
  if (!differ) {
    for (size_t i = 0; i < x.objective.monomials.size() && !differ; ++i)
      differ = x.objective.monomials[i].coeff != y.objective.monomials[i].coeff ||
               x.objective.monomials[i].exponents != y.objective.monomials[i].exponents;
  }
  CHECK(differ);
  CHECK_THROWS_AS(random_instance(0, 2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_instance(2, 2, 0, 1), std::invalid_argument);
}
