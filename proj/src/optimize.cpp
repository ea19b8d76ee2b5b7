#include "lattopt/optimize.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "lattopt/cones.hpp"
#include "lattopt/errors.hpp"
#include "lattopt/genfun.hpp"

namespace lattopt {
namespace {

enum class Kind { kEmpty, kPoint, kFull };

// A problem instance with its affine hull factored out: either certified
// lattice-empty, a single lattice point, or a full-dimensional polytope in t
// coordinates together with the lattice bijection x = x0 + basis * t.
struct ReducedInstance {
  Kind kind = Kind::kEmpty;
  LatticePoint point;  // kPoint, original coordinates
  Polytope reduced;    // kFull
  Polynomial objective;
  LatticePoint x0;
  std::vector<LatticePoint> basis;  // columns, each length dim(P)
};

BigRat row_at(const Polytope& p, size_t i, const RationalPoint& v) {
  BigRat s(0);
  for (size_t j = 0; j < p.dim; ++j) s += BigRat(p.A[i][j]) * v[j];
  return s;
}

ReducedInstance reduce_instance(const Polytope& p, const Polynomial& fbar) {
  if (p.dim == 0 || fbar.dim != p.dim)
    throw std::invalid_argument("optimize: dimension mismatch between polytope and objective");
  ReducedInstance out;
  auto verts = vertices(p);
  bool bounded = is_bounded(p);
  if (!bounded) throw UnboundedError("feasible region is unbounded");
  if (verts.empty()) return out;  // bounded + vertex-free certifies emptiness
  if (is_full_dimensional(p, verts)) {
    out.kind = Kind::kFull;
    out.reduced = p;
    out.objective = fbar;
    out.x0.assign(p.dim, BigInt(0));
    out.basis.assign(p.dim, LatticePoint(p.dim, BigInt(0)));
    for (size_t j = 0; j < p.dim; ++j) out.basis[j][j] = 1;
    return out;
  }

  // Rows tight at every vertex cut out the affine hull; the rest stay as
  // genuine inequalities of the reduced problem.
  std::vector<char> is_eq(p.A.size(), 0);
  linalg::IntMat eq_rows;
  linalg::IntVec eq_rhs;
  for (size_t i = 0; i < p.A.size(); ++i) {
    bool tight = true;
    for (const auto& v : verts) {
      if (row_at(p, i, v) != BigRat(p.b[i])) {
        tight = false;
        break;
      }
    }
    if (tight) {
      is_eq[i] = 1;
      eq_rows.push_back(p.A[i]);
      eq_rhs.push_back(p.b[i]);
    }
  }
  auto sol = linalg::solve_integer_affine(eq_rows, eq_rhs);
  if (!sol) return out;  // affine hull misses the lattice entirely
  if (sol->kernel.empty()) {
    if (contains_lattice(p, sol->x0)) {
      out.kind = Kind::kPoint;
      out.point = sol->x0;
    }
    return out;
  }

  size_t m = sol->kernel.size();
  linalg::IntMat At;
  std::vector<BigInt> bt;
  for (size_t i = 0; i < p.A.size(); ++i) {
    if (is_eq[i]) continue;
    linalg::IntVec row(m);
    for (size_t j = 0; j < m; ++j) row[j] = linalg::dot_int(p.A[i], sol->kernel[j]);
    At.push_back(std::move(row));
    bt.push_back(p.b[i] - linalg::dot_int(p.A[i], sol->x0));
  }
  out.kind = Kind::kFull;
  out.reduced = Polytope(m, std::move(At), std::move(bt));
  out.objective = substitute_affine(fbar, sol->x0, sol->kernel);
  out.x0 = sol->x0;
  out.basis = sol->kernel;
  return out;
}

// Lazily extends W_k = f(z d/dz)^k applied to the generating function and the
// power sums S_k = W_k(1). Each rung reuses the previous one.
class PowerLadder {
 public:
  PowerLadder(const Polytope& p, const Polynomial& fbar) : inst_(reduce_instance(p, fbar)) {
    switch (inst_.kind) {
      case Kind::kEmpty:
        count_ = 0;
        break;
      case Kind::kPoint:
        count_ = 1;
        point_value_ = evaluate(fbar, inst_.point);
        break;
      case Kind::kFull: {
        gf_ = generating_function(inst_.reduced);
        if (inst_.reduced.dim <= 4) {
          engine_.emplace(*gf_, inst_.objective);
          count_ = engine_->count();
        } else {
          // Packed-key engine caps at 4 rays per cone; fall back to the
          // generic term-level operators beyond that.
          w_ = lift(*gf_);
          BigRat n = specialize_at_one(*w_);
          if (!is_integer(n)) throw std::logic_error("lattice point count failed integrality check");
          count_ = n.get_num();
        }
        if (count_ < 0) throw std::logic_error("lattice point count is negative");
        break;
      }
    }
  }

  const BigInt& count() const { return count_; }

  const BigInt& sum(unsigned k) {
    if (k == 0) throw std::invalid_argument("power index k must be >= 1");
    if (count_ == 0) throw InfeasibleError("empty feasible set");
    while (sums_.size() < k) {
      if (inst_.kind == Kind::kPoint) {
        sums_.push_back(int_pow(point_value_, static_cast<unsigned long>(sums_.size() + 1)));
      } else if (engine_) {
        const BigRat& s = engine_->sum(static_cast<unsigned>(sums_.size() + 1));
        if (!is_integer(s)) throw std::logic_error("power sum failed integrality check");
        sums_.push_back(s.get_num());
      } else {
        w_ = apply_polynomial(*w_, inst_.objective);
        BigRat s = specialize_at_one(*w_);
        if (!is_integer(s)) throw std::logic_error("power sum failed integrality check");
        sums_.push_back(s.get_num());
      }
      check_sign(sums_.back());
    }
    return sums_[k - 1];
  }

  // S_k without materializing rungs 1..k-1; the intermediate specializations
  // dominate deep single-k ladders (fptas, bisection halves).
  BigInt sum_final(unsigned k) {
    if (k == 0) throw std::invalid_argument("power index k must be >= 1");
    if (count_ == 0) throw InfeasibleError("empty feasible set");
    if (k <= sums_.size()) return sums_[k - 1];
    BigInt out;
    if (inst_.kind == Kind::kPoint) {
      out = int_pow(point_value_, static_cast<unsigned long>(k));
    } else if (engine_) {
      const BigRat& s = engine_->sum_at(k);
      if (!is_integer(s)) throw std::logic_error("power sum failed integrality check");
      out = s.get_num();
    } else {
      out = sum(k);
    }
    check_sign(out);
    return out;
  }

  // The unique feasible lattice point, available when count() == 1: each
  // coordinate sum over a one-point set is the coordinate itself.
  std::optional<LatticePoint> single_point() const {
    if (inst_.kind == Kind::kPoint) return inst_.point;
    if (inst_.kind != Kind::kFull || count_ != 1) return std::nullopt;
    size_t m = inst_.reduced.dim;
    LatticePoint t(m);
    for (size_t j = 0; j < m; ++j) {
      BigRat c;
      if (engine_) {
        std::vector<unsigned> e(m, 0);
        e[j] = 1;
        PowerEngine coord(*gf_, Polynomial(m, {Monomial{BigInt(1), e}}));
        c = coord.sum(1);
      } else {
        c = specialize_at_one(apply_euler_operator(lift(*gf_), j));
      }
      if (!is_integer(c)) throw std::logic_error("coordinate extraction failed integrality check");
      t[j] = c.get_num();
    }
    size_t d = inst_.x0.size();
    LatticePoint x = inst_.x0;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < m; ++j) x[i] += inst_.basis[j][i] * t[j];
    return x;
  }

 private:
  static void check_sign(const BigInt& s) {
    if (s < 0)
      throw std::invalid_argument(
          "negative power sum: objective is not nonnegative over the feasible set");
  }

  ReducedInstance inst_;
  std::optional<RationalFunctionSum> gf_;
  std::optional<PowerEngine> engine_;
  std::optional<GeneralizedSum> w_;  // generic-operator fallback state
  BigInt count_;
  BigInt point_value_;
  std::vector<BigInt> sums_;
};

BoundsReport make_report(unsigned k, const BigInt& n, const BigInt& s, const BigRat& precision) {
  BoundsReport rep;
  rep.k = k;
  rep.count = n;
  rep.power_sum = s;
  BigRat mean = make_rat(s, n);
  rep.lower = rational_kth_root_interval(mean, k, precision);
  rep.upper = rational_kth_root_interval(BigRat(s), k, precision);
  rep.ceil_lower = integer_kth_root_ceil(mean, k);
  rep.floor_upper = integer_kth_root_floor(BigRat(s), k);
  rep.converged = rep.floor_upper <= rep.ceil_lower;
  return rep;
}

// Partial sums of atanh(x) = sum x^(2i+1)/(2i+1) with an exact geometric
// tail bound; requires 0 <= x <= 1/3 so the tail ratio x^2 stays below 1/8.
std::pair<BigRat, BigRat> atanh_bracket(const BigRat& x, unsigned terms) {
  BigRat x2 = x * x;
  BigRat p = x;
  BigRat sum(0);
  for (unsigned i = 0; i < terms; ++i) {
    sum += p / BigRat(2 * i + 1);
    p *= x2;
  }
  BigRat tail = p / (BigRat(2 * terms + 1) * (BigRat(1) - x2));
  return {sum, sum + tail};
}

// ln v = s*ln 2 + ln m for v = 2^s * m with m in [1,2); both logarithms via
// atanh: ln 2 = 2 atanh(1/3), ln m = 2 atanh((m-1)/(m+1)).
std::pair<BigRat, BigRat> ln_bracket(const BigInt& v, unsigned terms) {
  size_t s = mpz_sizeinbase(v.get_mpz_t(), 2) - 1;
  BigRat m = make_rat(v, int_pow(BigInt(2), static_cast<unsigned long>(s)));
  auto l2 = atanh_bracket(make_rat(1, 3), terms);
  auto lm = atanh_bracket((m - 1) / (m + 1), terms);
  BigRat sr(static_cast<unsigned long>(s));
  return {2 * (sr * l2.first + lm.first), 2 * (sr * l2.second + lm.second)};
}

void check_epsilon(const BigRat& epsilon) {
  if (epsilon <= 0 || epsilon > 1) throw std::invalid_argument("epsilon must be in (0, 1]");
}

}  // namespace

std::pair<Polynomial, ShiftInfo> normalize(const Polytope& p, const Polynomial& f,
                                           bool known_nonnegative) {
  if (f.dim != p.dim)
    throw std::invalid_argument("normalize: dimension mismatch between polytope and objective");
  Box box = bounding_box(p);  // throws for empty / unbounded P
  ShiftInfo info;
  info.M = 1;
  for (size_t j = 0; j < p.dim; ++j) {
    info.M = std::max(info.M, int_abs(box.lo[j]));
    info.M = std::max(info.M, int_abs(box.hi[j]));
  }
  info.C = f.max_abs_coeff();
  info.r = f.monomial_count();
  info.D = f.total_degree();
  info.U = BigInt(info.r) * info.C * int_pow(info.M, info.D);
  info.L = -info.U;
  if (known_nonnegative) {
    info.shifted = false;
    return {f, info};
  }
  info.shifted = true;
  return {poly_shift_constant(f, info.U), info};  // f - L = f + U
}

BigInt count_lattice_points(const Polytope& p) {
  PowerLadder ladder(p, Polynomial(p.dim, {}));
  return ladder.count();
}

BoundsReport bounds(const Polytope& p, const Polynomial& fbar, unsigned k,
                    const BigRat& precision) {
  if (k == 0) throw std::invalid_argument("bounds: k must be >= 1");
  PowerLadder ladder(p, fbar);
  if (ladder.count() == 0) throw InfeasibleError("empty feasible set");
  return make_report(k, ladder.count(), ladder.sum(k), precision);
}

std::vector<BoundsReport> bounds_sequence(const Polytope& p, const Polynomial& fbar,
                                          unsigned k_max, const BigRat& precision) {
  if (k_max == 0) throw std::invalid_argument("bounds_sequence: k_max must be >= 1");
  PowerLadder ladder(p, fbar);
  if (ladder.count() == 0) throw InfeasibleError("empty feasible set");
  std::vector<BoundsReport> out;
  out.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k)
    out.push_back(make_report(k, ladder.count(), ladder.sum(k), precision));
  return out;
}

OptimizeResult optimize_exact(const Polytope& p, const Polynomial& f, bool known_nonnegative,
                              unsigned k_max, const BigRat& precision) {
  if (k_max == 0) throw std::invalid_argument("optimize_exact: k_max must be >= 1");
  auto [fbar, info] = normalize(p, f, known_nonnegative);
  PowerLadder ladder(p, fbar);
  if (ladder.count() == 0) throw InfeasibleError("empty feasible set");
  OptimizeResult res;
  res.shift = info;
  for (unsigned k = 1; k <= k_max; ++k) {
    res.trace.push_back(make_report(k, ladder.count(), ladder.sum(k), precision));
    if (res.trace.back().converged) {
      res.converged = true;
      break;
    }
  }
  const BoundsReport& last = res.trace.back();
  BigInt adj = info.shifted ? info.L : BigInt(0);
  res.value = last.floor_upper + adj;
  res.lower = last.ceil_lower + adj;
  return res;
}

unsigned fptas_schedule_k(const BigInt& count, const BigRat& epsilon) {
  check_epsilon(epsilon);
  if (count <= 1) return 1;
  BigRat c = BigRat(1) + BigRat(1) / epsilon;
  // c * ln(count) is irrational for count >= 2, so the two ceilings must
  // eventually agree as the bracket narrows.
  for (unsigned terms = 8; terms <= (1u << 16); terms *= 2) {
    BigInt kl, kh;
    {
      auto [lo, hi] = ln_bracket(count, terms);
      kl = rat_ceil(c * lo);
      kh = rat_ceil(c * hi);
    }
    if (kl == kh) {
      if (kl < 1) return 1;
      if (!kl.fits_ulong_p() || kl.get_ui() > std::numeric_limits<unsigned>::max() / 2)
        throw std::invalid_argument("fptas: required k is impractically large");
      return static_cast<unsigned>(kl.get_ui());
    }
  }
  throw std::logic_error("fptas_schedule_k: logarithm bracketing did not converge");
}

FptasResult fptas(const Polytope& p, const Polynomial& f, const BigRat& epsilon, bool recover,
                  const BigRat& precision) {
  check_epsilon(epsilon);
  PowerLadder ladder(p, f);
  if (ladder.count() == 0) throw InfeasibleError("empty feasible set");
  FptasResult res;
  res.epsilon = epsilon;
  res.count = ladder.count();
  res.k_used = fptas_schedule_k(ladder.count(), epsilon);
  BigRat mean = make_rat(ladder.sum_final(res.k_used), ladder.count());
  res.lower_bound = rational_kth_root_interval(mean, res.k_used, precision);
  if (recover) {
    RecoveredPoint rp = recover_point(p, f, epsilon);
    res.certified_point = rp.point;
    res.certified_value = rp.value;
  }
  return res;
}

RecoveredPoint recover_point(const Polytope& p, const Polynomial& fbar, const BigRat& epsilon) {
  check_epsilon(epsilon);
  PowerLadder root(p, fbar);
  if (root.count() == 0) throw InfeasibleError("empty feasible set");
  const unsigned k = fptas_schedule_k(root.count(), epsilon);  // fixed for the whole descent
  if (auto pt = root.single_point()) return {*pt, evaluate(fbar, *pt)};

  Box box = bounding_box(p);
  const size_t d = p.dim;
  size_t cursor = 0;
  struct HalfStats {
    BigInt count;
    BigInt sum;
    std::optional<LatticePoint> only;
  };
  auto measure = [&](const Box& q) -> std::optional<HalfStats> {
    PowerLadder l(intersect_with_box(p, q), fbar);
    if (l.count() == 0) return std::nullopt;
    HalfStats h;
    h.count = l.count();
    h.only = l.single_point();
    // A one-point half needs no ladder: S_k = fbar(point)^k.
    if (h.only)
      h.sum = int_pow(evaluate(fbar, *h.only), static_cast<unsigned long>(k));
    else
      h.sum = l.sum_final(k);
    return h;
  };

  for (;;) {
    size_t split = d;  // round-robin over coordinates that still have width
    for (size_t step = 0; step < d; ++step) {
      size_t c = (cursor + step) % d;
      if (box.lo[c] < box.hi[c]) {
        split = c;
        cursor = (c + 1) % d;
        break;
      }
    }
    if (split == d) {
      LatticePoint x = box.lo;
      if (!contains_lattice(p, x))
        throw std::logic_error("recover_point: descent reached an infeasible cell");
      return {x, evaluate(fbar, x)};
    }
    BigInt mid = floor_div(box.lo[split] + box.hi[split], 2);
    Box low = box;
    low.hi[split] = mid;
    Box high = box;
    high.lo[split] = mid + 1;
    auto sl = measure(low);
    auto sh = measure(high);
    if (!sl && !sh) throw std::logic_error("recover_point: both bisection halves are empty");
    // Keep the half with the larger mean of fbar^k; exact cross comparison
    // S_low * N_high >= S_high * N_low, ties to the lower half.
    bool keep_low = !sh || (sl && sl->sum * sh->count >= sh->sum * sl->count);
    const HalfStats& kept = keep_low ? *sl : *sh;
    if (kept.only) return {*kept.only, evaluate(fbar, *kept.only)};
    box = keep_low ? low : high;
  }
}

std::vector<MixedEntry> mixed_integer_sequence(const Polytope& p, const Polynomial& f,
                                               const std::vector<size_t>& integer_vars,
                                               const std::vector<long>& grid,
                                               const BigRat& epsilon, bool exact_mode,
                                               bool known_nonnegative, unsigned k_max) {
  if (f.dim != p.dim)
    throw std::invalid_argument("mixed: dimension mismatch between polytope and objective");
  std::vector<bool> is_continuous(p.dim, true);
  for (size_t i : integer_vars) {
    if (i >= p.dim) throw std::invalid_argument("mixed: integer variable index out of range");
    is_continuous[i] = false;
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0) throw std::invalid_argument("mixed: grid values must be positive");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("mixed: grid values must be strictly increasing");
  }

  std::vector<MixedEntry> out;
  if (std::none_of(is_continuous.begin(), is_continuous.end(), [](bool c) { return c; })) {
    // Purely integer problem: every grid collapses to the original instance.
    OptimizeResult r = optimize_exact(p, f, known_nonnegative, k_max);
    MixedEntry e;
    e.n = 1;
    e.scale = 1;
    e.raw_value = r.value;
    e.value = BigRat(r.value);
    e.shift_L = 0;
    e.exact = true;
    e.converged = r.converged;
    out.push_back(std::move(e));
    return out;
  }

  unsigned dc = 0;  // max total degree in the continuous block
  for (const auto& mono : f.monomials) {
    unsigned deg = 0;
    for (size_t j = 0; j < p.dim; ++j)
      if (is_continuous[j]) deg += mono.exponents[j];
    dc = std::max(dc, deg);
  }

  for (long n_long : grid) {
    BigInt n(n_long);
    Polytope gamma = semi_dilate(p, n, is_continuous);
    // g_n(x, y) = n^dc * f(x, y/n): monomial coefficients pick up
    // n^(dc - continuous degree), clearing all denominators.
    std::vector<Monomial> ms;
    ms.reserve(f.monomials.size());
    for (const auto& mono : f.monomials) {
      unsigned deg = 0;
      for (size_t j = 0; j < p.dim; ++j)
        if (is_continuous[j]) deg += mono.exponents[j];
      ms.push_back({mono.coeff * int_pow(n, dc - deg), mono.exponents});
    }
    Polynomial gn(p.dim, std::move(ms));

    MixedEntry e;
    e.n = n;
    e.scale = int_pow(n, dc);
    e.shift_L = 0;
    if (exact_mode) {
      OptimizeResult r = optimize_exact(gamma, gn, known_nonnegative, k_max);
      e.raw_value = r.value;
      e.exact = true;
      e.converged = r.converged;
    } else if (known_nonnegative) {
      FptasResult r = fptas(gamma, gn, epsilon, /*recover=*/true);
      e.raw_value = *r.certified_value;
    } else {
      auto [gbar, info] = normalize(gamma, gn, false);
      FptasResult r = fptas(gamma, gbar, epsilon, /*recover=*/true);
      e.raw_value = *r.certified_value;
      e.shifted = true;
      e.shift_L = info.L;
    }
    e.value = make_rat(e.raw_value, e.scale);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace lattopt
