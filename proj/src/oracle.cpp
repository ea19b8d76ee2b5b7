#include "lattopt/oracle.hpp"

#include <stdexcept>

namespace lattopt {

namespace {

// Visits box cells in lexicographic order, calling fn on members of P.
template <typename Fn>
void scan(const Polytope& p, long budget, Fn&& fn) {
  if (!is_bounded(p)) throw std::domain_error("enumeration over an unbounded polytope");
  auto verts = vertices(p);
  if (verts.empty()) return;  // bounded and vertex-free: certified empty
  Box box = bounding_box(p);
  BigInt cells(1);
  for (size_t j = 0; j < p.dim; ++j) {
    BigInt w = box.hi[j] - box.lo[j] + 1;
    if (w <= 0) return;
    cells *= w;
    if (cells > budget) throw BudgetExceeded("lattice enumeration budget exceeded");
  }
  LatticePoint x = box.lo;
  while (true) {
    if (contains_lattice(p, x)) fn(x);
    size_t j = p.dim;
    while (j > 0) {
      --j;
      if (x[j] < box.hi[j]) {
        ++x[j];
        for (size_t l = j + 1; l < p.dim; ++l) x[l] = box.lo[l];
        break;
      }
      if (j == 0) return;
    }
  }
}

}  // namespace

std::vector<LatticePoint> enumerate_lattice_points(const Polytope& p, long budget) {
  std::vector<LatticePoint> out;
  scan(p, budget, [&](const LatticePoint& x) { out.push_back(x); });
  return out;
}

BigInt brute_power_sum(const Polytope& p, const Polynomial& f, unsigned k, long budget) {
  BigInt s(0);
  scan(p, budget, [&](const LatticePoint& x) { s += int_pow(evaluate(f, x), k); });
  return s;
}

std::optional<BruteOptimum> brute_max(const Polytope& p, const Polynomial& f, long budget) {
  std::optional<BruteOptimum> best;
  scan(p, budget, [&](const LatticePoint& x) {
    BigInt v = evaluate(f, x);
    if (!best || v > best->value) best = BruteOptimum{v, x};
  });
  return best;
}

std::optional<BruteOptimum> brute_min(const Polytope& p, const Polynomial& f, long budget) {
  std::optional<BruteOptimum> best;
  scan(p, budget, [&](const LatticePoint& x) {
    BigInt v = evaluate(f, x);
    if (!best || v < best->value) best = BruteOptimum{v, x};
  });
  return best;
}

}  // namespace lattopt
