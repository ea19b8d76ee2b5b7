#include "lattopt/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lattopt {
namespace linalg {

BigInt det(const IntMat& m) {
  // Bareiss fraction-free elimination; exact divisions only.
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det requires a square matrix");
  if (n == 0) return BigInt(1);
  IntMat a = m;
  BigInt prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return BigInt(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

std::optional<RatVec> solve(const IntMat& A, const RatVec& b) {
  size_t n = A.size();
  if (b.size() != n) throw std::invalid_argument("solve dimension mismatch");
  RatMat a(n, RatVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = BigRat(A[i][j]);
    a[i][n] = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[k], a[p]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      BigRat f = a[i][k] / a[k][k];
      for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

int rank(const RatMat& m) {
  if (m.empty()) return 0;
  RatMat a = m;
  size_t rows = a.size(), cols = a[0].size();
  int r = 0;
  size_t pivot_row = 0;
  for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
    size_t p = pivot_row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[pivot_row], a[p]);
    for (size_t i = pivot_row + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      BigRat f = a[i][c] / a[pivot_row][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[pivot_row][j];
    }
    ++pivot_row;
    ++r;
  }
  return r;
}

int rank_int(const IntMat& m) {
  RatMat a(m.size());
  for (size_t i = 0; i < m.size(); ++i) a[i] = RatVec(m[i].begin(), m[i].end());
  return rank(a);
}

IntVec primitive(IntVec v) {
  BigInt g(0);
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return v;
  int lead = 0;
  for (const auto& x : v) {
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVec primitive_directed(IntVec v) {
  BigInt g(0);
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

std::optional<IntVec> kernel_vector(const IntMat& m) {
  if (m.empty()) return std::nullopt;
  size_t d = m[0].size();
  if (m.size() != d - 1) throw std::invalid_argument("kernel_vector expects (d-1) x d");
  // Cofactor expansion: v_j = (-1)^j * det(m without column j).
  IntVec v(d);
  bool nonzero = false;
  for (size_t j = 0; j < d; ++j) {
    IntMat sub(d - 1, IntVec(d - 1));
    for (size_t i = 0; i < d - 1; ++i) {
      size_t cc = 0;
      for (size_t c = 0; c < d; ++c) {
        if (c == j) continue;
        sub[i][cc++] = m[i][c];
      }
    }
    BigInt dj = det(sub);
    v[j] = (j % 2 == 0) ? dj : BigInt(-dj);
    if (v[j] != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;  // rank < d-1
  return primitive(std::move(v));
}

BigRat dot(const RatVec& a, const RatVec& b) {
  BigRat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt dot_int(const IntVec& a, const IntVec& b) {
  BigInt s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Column-operation Hermite reduction: returns U (d x d, unimodular) and the
// transformed H = E * U with H in column echelon form. Column ops only, so
// E * U = H is maintained exactly.
static void hermite_columns(const IntMat& E, IntMat& H, IntMat& U) {
  size_t rows = E.size(), d = E.empty() ? 0 : E[0].size();
  H = E;
  U.assign(d, IntVec(d, BigInt(0)));
  for (size_t i = 0; i < d; ++i) U[i][i] = 1;
  auto col_sub = [&](size_t dst, size_t src, const BigInt& q) {
    for (size_t i = 0; i < rows; ++i) H[i][dst] -= q * H[i][src];
    for (size_t i = 0; i < d; ++i) U[i][dst] -= q * U[i][src];
  };
  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < rows; ++i) std::swap(H[i][a], H[i][b]);
    for (size_t i = 0; i < d; ++i) std::swap(U[i][a], U[i][b]);
  };
  auto col_neg = [&](size_t c) {
    for (size_t i = 0; i < rows; ++i) H[i][c] = -H[i][c];
    for (size_t i = 0; i < d; ++i) U[i][c] = -U[i][c];
  };
  size_t pc = 0;  // next pivot column
  for (size_t r = 0; r < rows && pc < d; ++r) {
    // Euclid across columns pc..d-1 on row r.
    while (true) {
      size_t nz = 0;
      size_t best = d;
      for (size_t c = pc; c < d; ++c)
        if (H[r][c] != 0) {
          ++nz;
          if (best == d || int_abs(H[r][c]) < int_abs(H[r][best])) best = c;
        }
      if (nz == 0) break;
      if (best != pc) col_swap(pc, best);
      if (H[r][pc] < 0) col_neg(pc);
      bool cleared = true;
      for (size_t c = pc + 1; c < d; ++c) {
        if (H[r][c] == 0) continue;
        BigInt q = floor_div(H[r][c], H[r][pc]);
        col_sub(c, pc, q);
        if (H[r][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (H[r][pc] != 0) ++pc;
  }
}

std::optional<IntAffineSolution> solve_integer_affine(const IntMat& E, const IntVec& e) {
  if (E.empty()) throw std::invalid_argument("solve_integer_affine needs at least one row");
  size_t rows = E.size(), d = E[0].size();
  IntMat H, U;
  hermite_columns(E, H, U);
  // Forward-substitute through the echelon columns: E x = e with x = U y.
  IntVec y(d, BigInt(0));
  size_t pc = 0;
  std::vector<bool> pivot_col(d, false);
  for (size_t r = 0; r < rows; ++r) {
    BigInt acc(0);
    for (size_t c = 0; c < pc; ++c) acc += H[r][c] * y[c];
    BigInt rem = e[r] - acc;
    if (pc < d && H[r][pc] != 0) {
      BigInt q, rr;
      mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), rem.get_mpz_t(), H[r][pc].get_mpz_t());
      if (rr != 0) return std::nullopt;  // no integer solution on this row
      y[pc] = q;
      pivot_col[pc] = true;
      ++pc;
    } else if (rem != 0) {
      return std::nullopt;  // inconsistent
    }
  }
  IntAffineSolution sol;
  sol.x0.assign(d, BigInt(0));
  for (size_t i = 0; i < d; ++i)
    for (size_t c = 0; c < d; ++c) sol.x0[i] += U[i][c] * y[c];
  for (size_t c = pc; c < d; ++c) {
    IntVec k(d);
    for (size_t i = 0; i < d; ++i) k[i] = U[i][c];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace linalg
}  // namespace lattopt
