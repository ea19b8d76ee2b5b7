#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lattopt/instances.hpp"
#include "lattopt/oracle.hpp"

using namespace lattopt;

namespace {
Polytope box2(long lo, long hi) {
  return Polytope(2,
                  {{BigInt(-1), BigInt(0)},
                   {BigInt(1), BigInt(0)},
                   {BigInt(0), BigInt(-1)},
                   {BigInt(0), BigInt(1)}},
                  {BigInt(-lo), BigInt(hi), BigInt(-lo), BigInt(hi)});
}
LatticePoint pt(std::initializer_list<long> xs) {
  LatticePoint p;
  for (long x : xs) p.emplace_back(x);
  return p;
}
}  // namespace

TEST_CASE("enumeration in lexicographic order") {
  auto pts = enumerate_lattice_points(box2(0, 1));
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == pt({0, 0}));
  CHECK(pts[1] == pt({0, 1}));
  CHECK(pts[2] == pt({1, 0}));
  CHECK(pts[3] == pt({1, 1}));
}

TEST_CASE("enumeration respects non-box constraints") {
  // triangle x >= 0, y >= 0, x + y <= 2: 6 points
  Polytope tri(2, {{BigInt(-1), BigInt(0)}, {BigInt(0), BigInt(-1)}, {BigInt(1), BigInt(1)}},
               {BigInt(0), BigInt(0), BigInt(2)});
  CHECK(enumerate_lattice_points(tri).size() == 6);
}

TEST_CASE("thin sliver has exactly its two known points") {
  auto ex = example1();
  auto pts = enumerate_lattice_points(ex.polytope);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == pt({1, 1}));
  CHECK(pts[1] == pt({2, 1000}));
}

TEST_CASE("empty and lower-dimensional regions") {
  Polytope empty(1, {{BigInt(1)}, {BigInt(-1)}}, {BigInt(0), BigInt(-1)});
  CHECK(enumerate_lattice_points(empty).empty());
  // segment x + y = 3 in [0,3]^2
  Polytope slice(2,
                 {{BigInt(1), BigInt(1)},
                  {BigInt(-1), BigInt(-1)},
                  {BigInt(-1), BigInt(0)},
                  {BigInt(1), BigInt(0)},
                  {BigInt(0), BigInt(-1)},
                  {BigInt(0), BigInt(1)}},
                 {BigInt(3), BigInt(-3), BigInt(0), BigInt(3), BigInt(0), BigInt(3)});
  CHECK(enumerate_lattice_points(slice).size() == 4);
  // affine hull misses the lattice: 2x = 1 in [0,1]
  Polytope offgrid(1, {{BigInt(2)}, {BigInt(-2)}, {BigInt(-1)}, {BigInt(1)}},
                   {BigInt(1), BigInt(-1), BigInt(0), BigInt(1)});
  CHECK(enumerate_lattice_points(offgrid).empty());
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(enumerate_lattice_points(box2(0, 1000), 1000), BudgetExceeded);
  CHECK_NOTHROW(enumerate_lattice_points(box2(0, 30), 10000));
}

TEST_CASE("brute power sums") {
  // f = x over {0..3}: S_1 = 6, S_2 = 14, S_3 = 36
  Polytope seg(1, {{BigInt(-1)}, {BigInt(1)}}, {BigInt(0), BigInt(3)});
  Polynomial f(1, {{BigInt(1), {1}}});
  CHECK(brute_power_sum(seg, f, 1) == 6);
  CHECK(brute_power_sum(seg, f, 2) == 14);
  CHECK(brute_power_sum(seg, f, 3) == 36);
  CHECK(brute_power_sum(seg, Polynomial::constant(1, BigInt(1)), 5) == 4);  // N
}

TEST_CASE("brute optima and argopt tie-breaking") {
  auto ex = example1();
  auto mx = brute_max(ex.polytope, ex.objective);
  REQUIRE(mx.has_value());
  CHECK(mx->value == 8000);
  CHECK(mx->argopt == pt({2, 1000}));
  auto mn = brute_min(ex.polytope, ex.objective);
  REQUIRE(mn.has_value());
  CHECK(mn->value == 1);
  CHECK(mn->argopt == pt({1, 1}));
  // lexicographically least attaining point on a tie
  Polytope sq = box2(0, 1);
  Polynomial cst = Polynomial::constant(2, BigInt(3));
  auto tie = brute_max(sq, cst);
  REQUIRE(tie.has_value());
  CHECK(tie->argopt == pt({0, 0}));
  // empty set gives nullopt
  Polytope empty(1, {{BigInt(1)}, {BigInt(-1)}}, {BigInt(0), BigInt(-1)});
  CHECK(!brute_max(empty, Polynomial::zero(1)).has_value());
}
