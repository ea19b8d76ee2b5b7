#include "lattopt/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lattopt/errors.hpp"

namespace lattopt {

using linalg::IntMat;
using linalg::IntVec;
using linalg::RatMat;
using linalg::RatVec;

Polytope::Polytope(size_t d, IntMat A_, std::vector<BigInt> b_)
    : dim(d), A(std::move(A_)), b(std::move(b_)) {
  if (A.size() != b.size()) throw std::invalid_argument("row count mismatch between A and b");
  for (const auto& row : A)
    if (row.size() != dim) throw std::invalid_argument("row width does not match dimension");
}

Polytope Polytope::from_rational_rows(size_t d, const RatMat& A, const RatVec& b) {
  if (A.size() != b.size()) throw std::invalid_argument("row count mismatch between A and b");
  IntMat Ai(A.size(), IntVec(d));
  std::vector<BigInt> bi(b.size());
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != d) throw std::invalid_argument("row width does not match dimension");
    BigInt l(1);
    for (const auto& c : A[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den().get_mpz_t());
    for (size_t j = 0; j < d; ++j) {
      BigRat v = A[i][j] * l;
      Ai[i][j] = v.get_num();
    }
    BigRat v = b[i] * l;
    bi[i] = v.get_num();
  }
  return Polytope(d, std::move(Ai), std::move(bi));
}

static BigRat row_dot(const IntVec& row, const RationalPoint& x) {
  BigRat s(0);
  for (size_t j = 0; j < row.size(); ++j) s += BigRat(row[j]) * x[j];
  return s;
}

bool contains(const Polytope& p, const RationalPoint& x) {
  if (x.size() != p.dim) throw std::invalid_argument("point dimension mismatch");
  for (size_t i = 0; i < p.A.size(); ++i)
    if (row_dot(p.A[i], x) > BigRat(p.b[i])) return false;
  return true;
}

bool contains_lattice(const Polytope& p, const LatticePoint& x) {
  if (x.size() != p.dim) throw std::invalid_argument("point dimension mismatch");
  for (size_t i = 0; i < p.A.size(); ++i)
    if (linalg::dot_int(p.A[i], x) > p.b[i]) return false;
  return true;
}

// Enumerates d-subsets of row indices in lexicographic order.
static bool next_subset(std::vector<size_t>& idx, size_t m) {
  size_t k = idx.size();
  size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] + (k - i) < m) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<RationalPoint> vertices(const Polytope& p) {
  size_t m = p.A.size(), d = p.dim;
  std::set<RationalPoint> found;
  if (d == 0 || m < d) return {};
  std::vector<size_t> idx(d);
  for (size_t i = 0; i < d; ++i) idx[i] = i;
  do {
    IntMat S(d, IntVec(d));
    RatVec rhs(d);
    for (size_t i = 0; i < d; ++i) {
      S[i] = p.A[idx[i]];
      rhs[i] = BigRat(p.b[idx[i]]);
    }
    auto x = linalg::solve(S, rhs);
    if (!x) continue;
    if (contains(p, *x)) found.insert(*x);
  } while (next_subset(idx, m));
  return std::vector<RationalPoint>(found.begin(), found.end());
}

bool is_bounded(const Polytope& p) {
  size_t d = p.dim;
  if (linalg::rank_int(p.A) < static_cast<int>(d)) return false;
  if (d == 1) {
    // Rank-1 1-d system: bounded iff both a ray with a>0 and one with a<0 exist.
    bool pos = false, neg = false;
    for (const auto& row : p.A) {
      if (row[0] > 0) pos = true;
      if (row[0] < 0) neg = true;
    }
    return pos && neg;
  }
  // Unbounded iff some (d-1)-subset of rows has a kernel direction r with
  // A r <= 0 (an extreme ray of the recession cone), for r or -r.
  std::vector<size_t> idx(d - 1);
  for (size_t i = 0; i < d - 1; ++i) idx[i] = i;
  size_t m = p.A.size();
  if (m < d - 1) return false;  // rank d impossible; already returned above
  do {
    IntMat S(d - 1, IntVec(d));
    for (size_t i = 0; i < d - 1; ++i) S[i] = p.A[idx[i]];
    auto r = linalg::kernel_vector(S);
    if (!r) continue;
    for (int s = 0; s < 2; ++s) {
      IntVec dir = *r;
      if (s == 1)
        for (auto& v : dir) v = -v;
      bool recession = true;
      for (const auto& row : p.A)
        if (linalg::dot_int(row, dir) > 0) {
          recession = false;
          break;
        }
      if (recession) return false;
    }
  } while (next_subset(idx, m));
  return true;
}

bool is_full_dimensional(const Polytope& p, const std::vector<RationalPoint>& verts) {
  if (verts.empty()) return false;
  RatMat diffs;
  for (size_t i = 1; i < verts.size(); ++i) {
    RatVec row(p.dim);
    for (size_t j = 0; j < p.dim; ++j) row[j] = verts[i][j] - verts[0][j];
    diffs.push_back(std::move(row));
  }
  if (diffs.empty()) return p.dim == 0;
  return linalg::rank(diffs) == static_cast<int>(p.dim);
}

bool is_full_dimensional(const Polytope& p) { return is_full_dimensional(p, vertices(p)); }

Cone tangent_cone(const Polytope& p, const RationalPoint& v) {
  size_t d = p.dim;
  IntMat tight;
  for (size_t i = 0; i < p.A.size(); ++i)
    if (row_dot(p.A[i], v) == BigRat(p.b[i])) tight.push_back(p.A[i]);
  if (linalg::rank_int(tight) < static_cast<int>(d))
    throw std::invalid_argument("tangent_cone: point is not a vertex");
  std::set<IntVec> rays;
  if (d == 1) {
    // One tight direction: the ray pointing into the polytope.
    for (const auto& row : tight) rays.insert({row[0] > 0 ? BigInt(-1) : BigInt(1)});
  } else {
    std::vector<size_t> idx(d - 1);
    for (size_t i = 0; i < d - 1; ++i) idx[i] = i;
    size_t m = tight.size();
    do {
      IntMat S(d - 1, IntVec(d));
      for (size_t i = 0; i < d - 1; ++i) S[i] = tight[idx[i]];
      auto r = linalg::kernel_vector(S);
      if (!r) continue;
      for (int s = 0; s < 2; ++s) {
        IntVec dir = *r;
        if (s == 1)
          for (auto& x : dir) x = -x;
        bool feasible = true;
        IntMat active;
        for (const auto& row : tight) {
          BigInt t = linalg::dot_int(row, dir);
          if (t > 0) {
            feasible = false;
            break;
          }
          if (t == 0) active.push_back(row);
        }
        // Extreme ray: feasible direction whose active set has rank d-1.
        // dir is already primitive (kernel_vector divides out the content);
        // re-running primitive() here would flip its sign convention and
        // could point the ray out of the cone.
        if (feasible && linalg::rank_int(active) == static_cast<int>(d - 1))
          rays.insert(dir);
      }
    } while (next_subset(idx, m));
  }
  Cone c;
  c.apex = v;
  c.generators.assign(rays.begin(), rays.end());
  return c;
}

Box bounding_box(const Polytope& p) {
  auto verts = vertices(p);
  bool bounded = is_bounded(p);
  if (verts.empty()) {
    // A bounded nonempty region always has a vertex, so no vertices plus
    // boundedness certifies emptiness. Without boundedness the region is
    // empty or contains a line; either way no box exists.
    if (bounded) throw InfeasibleError("bounding_box of an empty polytope");
    throw UnboundedError("bounding_box: region has no vertices (unbounded or empty)");
  }
  if (!bounded) throw UnboundedError("bounding_box of an unbounded polytope");
  Box box;
  box.lo.resize(p.dim);
  box.hi.resize(p.dim);
  for (size_t j = 0; j < p.dim; ++j) {
    BigRat mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    box.lo[j] = rat_floor(mn);
    box.hi[j] = rat_ceil(mx);
  }
  return box;
}

Polytope semi_dilate(const Polytope& p, const BigInt& n, const std::vector<bool>& is_continuous) {
  if (n < 1) throw std::invalid_argument("semi-dilation factor must be >= 1");
  if (is_continuous.size() != p.dim) throw std::invalid_argument("continuous mask dimension mismatch");
  IntMat A = p.A;
  std::vector<BigInt> b = p.b;
  for (size_t i = 0; i < A.size(); ++i) {
    for (size_t j = 0; j < p.dim; ++j)
      if (!is_continuous[j]) A[i][j] *= n;
    b[i] *= n;
  }
  return Polytope(p.dim, std::move(A), std::move(b));
}

Polytope intersect_with_box(const Polytope& p, const Box& box) {
  IntMat A = p.A;
  std::vector<BigInt> b = p.b;
  for (size_t j = 0; j < p.dim; ++j) {
    IntVec up(p.dim, BigInt(0)), down(p.dim, BigInt(0));
    up[j] = 1;
    down[j] = -1;
    A.push_back(up);
    b.push_back(box.hi[j]);
    A.push_back(down);
    b.push_back(-box.lo[j]);
  }
  return Polytope(p.dim, std::move(A), std::move(b));
}

}  // namespace lattopt
