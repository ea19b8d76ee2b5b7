#include "lattopt/cones.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lattopt/errors.hpp"
#include "lattopt/linalg.hpp"
#include "lattopt/roots.hpp"
#include "lattopt/series.hpp"

namespace lattopt {

using linalg::IntMat;
using linalg::IntVec;
using linalg::RatVec;

namespace {

constexpr int kMaxTieBreakAttempts = 200;
// Safety cap on the shortest-vector search box (cells). Desk-scale inputs
// stay far below this; exceeding it means the input is out of scope, not a
// soft failure we should silently approximate.
const long kMaxSearchCells = 30'000'000L;

IntMat rays_as_rows(const std::vector<LatticePoint>& rays) { return IntMat(rays.begin(), rays.end()); }

IntMat rays_as_columns(const std::vector<LatticePoint>& rays) {
  size_t d = rays.size();
  IntMat m(d, IntVec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m[i][j] = rays[j][i];
  return m;
}

// adj(M) with adj(M) * M = det(M) * I: entry (i,j) is the (j,i) cofactor.
IntMat adjugate(const IntMat& m) {
  size_t n = m.size();
  IntMat a(n, IntVec(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      IntMat sub(n - 1, IntVec(n - 1));
      for (size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          sub[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      BigInt d = linalg::det(sub);
      a[i][j] = ((i + j) % 2 == 0) ? d : BigInt(-d);
    }
  }
  return a;
}

// Inward normal of each facet: normals[i] is orthogonal to all rays except
// rays[i] and has positive product with rays[i].
std::vector<IntVec> inward_facet_normals(const std::vector<LatticePoint>& rays) {
  size_t d = rays.size();
  std::vector<IntVec> normals(d);
  if (d == 1) {
    normals[0] = IntVec{BigInt(sgn(rays[0][0]))};
    return normals;
  }
  for (size_t i = 0; i < d; ++i) {
    IntMat rows;
    rows.reserve(d - 1);
    for (size_t j = 0; j < d; ++j)
      if (j != i) rows.push_back(rays[j]);
    auto n = linalg::kernel_vector(rows);
    if (!n) throw std::logic_error("facet normal: rays are not linearly independent");
    BigInt s = linalg::dot_int(*n, rays[i]);
    if (s == 0) throw std::logic_error("facet normal: degenerate ray matrix");
    if (s < 0)
      for (auto& x : *n) x = -x;
    normals[i] = std::move(*n);
  }
  return normals;
}

// Half-open marks from the tie-break vector: a facet is kept (closed) iff y
// is on its strictly positive (inward) side. Also serves as the genericity
// check: y on a facet hyperplane aborts the attempt.
std::vector<bool> halfopen_flags(const std::vector<IntVec>& normals, const IntVec& y) {
  std::vector<bool> flags(normals.size());
  for (size_t i = 0; i < normals.size(); ++i) {
    BigInt s = linalg::dot_int(normals[i], y);
    if (s == 0)
      throw detail::DegenerateTieBreak("tie-break vector lies on a facet hyperplane");
    flags[i] = (s < 0);
  }
  return flags;
}

}  // namespace

BigInt cone_index(const SimplicialCone& c) {
  size_t d = c.apex.size();
  if (c.rays.size() != d) throw std::invalid_argument("cone_index: ray count must equal dimension");
  BigInt D = linalg::det(rays_as_rows(c.rays));
  if (D == 0) throw std::invalid_argument("cone_index: rays are linearly dependent");
  return int_abs(D);
}

std::vector<BigInt> generic_direction(size_t dim, const std::vector<const LatticePoint*>& rays) {
  for (BigInt t(1); t <= 100000; ++t) {
    std::vector<BigInt> lambda(dim);
    BigInt p(1);
    for (size_t j = 0; j < dim; ++j) {
      lambda[j] = p;
      p *= t;
    }
    bool ok = true;
    for (const auto* r : rays)
      if (linalg::dot_int(lambda, *r) == 0) {
        ok = false;
        break;
      }
    if (ok) return lambda;
  }
  throw std::logic_error("generic_direction: no moment-curve direction found");
}

namespace detail {

std::vector<SimplicialCone> triangulate_with(const Cone& cone, const LatticePoint& y) {
  size_t d = cone.apex.size();
  const auto& gens = cone.generators;
  if (d == 0) throw std::invalid_argument("triangulate: dimension must be positive");
  for (const auto& g : gens)
    if (g.size() != d) throw std::invalid_argument("triangulate: generator dimension mismatch");
  if (linalg::rank_int(rays_as_rows(gens)) != static_cast<int>(d))
    throw DegenerateError("triangulate: cone is not full-dimensional");

  std::vector<std::vector<size_t>> simplices;
  if (d == 1) {
    simplices.push_back({0});
  } else {
    // Greedy initial basis by index, then placing insertion of the rest.
    std::vector<size_t> basis;
    IntMat cur;
    for (size_t i = 0; i < gens.size() && basis.size() < d; ++i) {
      cur.push_back(gens[i]);
      if (linalg::rank_int(cur) == static_cast<int>(cur.size()))
        basis.push_back(i);
      else
        cur.pop_back();
    }
    simplices.push_back(basis);
    for (size_t k = 0; k < gens.size(); ++k) {
      if (std::find(basis.begin(), basis.end(), k) != basis.end()) continue;
      // Boundary facets of the current complex: facets used exactly once.
      std::map<std::vector<size_t>, std::vector<std::pair<size_t, size_t>>> incidence;
      for (size_t s = 0; s < simplices.size(); ++s) {
        for (size_t i = 0; i < d; ++i) {
          std::vector<size_t> f = simplices[s];
          f.erase(f.begin() + static_cast<long>(i));
          incidence[f].push_back({s, simplices[s][i]});
        }
      }
      std::vector<std::vector<size_t>> added;
      for (const auto& [facet, inc] : incidence) {
        if (inc.size() != 1) continue;
        IntMat rows;
        rows.reserve(d - 1);
        for (size_t idx : facet) rows.push_back(gens[idx]);
        auto n = linalg::kernel_vector(rows);
        if (!n) continue;  // facet of a simplex always has rank d-1; defensive
        // Orient outward: the simplex's opposite generator sits on the
        // negative side. Strict visibility only; a new ray on the facet
        // hyperplane contributes nothing full-dimensional there.
        if (linalg::dot_int(*n, gens[inc[0].second]) > 0)
          for (auto& x : *n) x = -x;
        if (linalg::dot_int(*n, gens[k]) > 0) {
          std::vector<size_t> ns = facet;
          ns.insert(std::lower_bound(ns.begin(), ns.end(), k), k);
          added.push_back(std::move(ns));
        }
      }
      for (auto& s : added) simplices.push_back(std::move(s));
    }
  }

  std::vector<SimplicialCone> pieces;
  pieces.reserve(simplices.size());
  for (const auto& s : simplices) {
    SimplicialCone piece;
    piece.apex = cone.apex;
    piece.rays.reserve(d);
    for (size_t idx : s) piece.rays.push_back(gens[idx]);
    piece.sign = 1;
    piece.open_facet = halfopen_flags(inward_facet_normals(piece.rays), y);
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

void decompose_with(const RationalPoint& apex, const std::vector<LatticePoint>& rays, int sign,
                    const LatticePoint& y, std::vector<SimplicialCone>& out) {
  size_t d = rays.size();
  auto normals = inward_facet_normals(rays);
  // Genericity of y is required at every node of the recursion tree, not
  // just at the leaves: the signed identity drops lower-dimensional pieces
  // supported on these facet hyperplanes.
  auto flags = halfopen_flags(normals, y);

  BigInt D = linalg::det(rays_as_rows(rays));
  if (D == 0) throw std::logic_error("decompose: singular ray matrix");
  BigInt index = int_abs(D);
  if (index == 1) {
    out.push_back(SimplicialCone{apex, rays, sign, std::move(flags)});
    return;
  }

  // Shortest-vector step: w = sum alpha_i rays[i] with max |alpha_i| <=
  // index^(-1/d); such a nonzero integer w exists by Minkowski's theorem
  // (the coefficient box has volume exactly 2^d). Search the enclosing
  // integer box exhaustively; among valid w minimize max |alpha_i|, then
  // take the lexicographically smallest.
  IntMat adj = adjugate(rays_as_columns(rays));  // alpha = adj * w / D, det(columns) = D
  BigInt index_pow = int_pow(index, static_cast<unsigned long>(d - 1));
  std::vector<BigInt> lo(d), hi(d);
  BigInt cells(1);
  for (size_t j = 0; j < d; ++j) {
    BigInt s(0);
    for (size_t i = 0; i < d; ++i) s += int_abs(rays[i][j]);
    // B with B * index^(1/d) <= s, i.e. B^d * index <= s^d.
    BigInt B = integer_kth_root_floor(make_rat(int_pow(s, static_cast<unsigned long>(d)), index),
                                      static_cast<unsigned>(d));
    lo[j] = -B;
    hi[j] = B;
    cells *= 2 * B + 1;
  }
  if (cells > kMaxSearchCells)
    throw std::runtime_error("decompose: shortest-vector search box exceeds the safety cap");

  std::vector<BigInt> w = lo, best_w;
  std::vector<BigInt> best_alpha;
  BigInt best_key(-1);
  while (true) {
    bool zero = true, unit_content = true;
    BigInt g(0);
    for (const auto& x : w) {
      if (x != 0) zero = false;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    unit_content = (g == 1);  // non-primitive w is dominated by its primitive form
    if (!zero && unit_content) {
      std::vector<BigInt> alpha(d);
      bool valid = true;
      BigInt key(0);
      for (size_t i = 0; i < d && valid; ++i) {
        BigInt a(0);
        for (size_t j = 0; j < d; ++j) a += adj[i][j] * w[j];
        alpha[i] = a;
        BigInt mag = int_abs(a);
        if (int_pow(mag, static_cast<unsigned long>(d)) > index_pow) valid = false;
        key = std::max(key, mag);
      }
      if (valid && (best_key < 0 || key < best_key || (key == best_key && w < best_w))) {
        best_key = key;
        best_w = w;
        best_alpha = std::move(alpha);
      }
    }
    // Odometer increment over the box.
    size_t j = d;
    while (j > 0) {
      --j;
      if (w[j] < hi[j]) {
        ++w[j];
        for (size_t r = j + 1; r < d; ++r) w[r] = lo[r];
        break;
      }
      if (j == 0) {
        j = d + 1;  // exhausted
        break;
      }
    }
    if (j == d + 1) break;
  }
  if (best_key < 0) throw std::logic_error("decompose: no short vector found (contradicts Minkowski bound)");

  for (size_t i = 0; i < d; ++i) {
    if (best_alpha[i] == 0) continue;
    // alpha_i = best_alpha[i] / D; the child replacing rays[i] by w enters
    // with the sign of alpha_i.
    int eps = sgn(best_alpha[i]) * sgn(D);
    std::vector<LatticePoint> child = rays;
    child[i] = best_w;
    decompose_with(apex, child, sign * eps, y, out);
  }
}

LatticePoint unimodular_apex_point(const SimplicialCone& c) {
  size_t d = c.apex.size();
  if (c.rays.size() != d) throw std::invalid_argument("unimodular_apex_point: ray count mismatch");
  IntMat G = rays_as_columns(c.rays);
  BigInt D = linalg::det(G);
  if (D != 1 && D != -1) throw std::invalid_argument("unimodular_apex_point: cone is not unimodular");
  IntMat inv = adjugate(G);
  if (D == -1)
    for (auto& row : inv)
      for (auto& x : row) x = -x;
  // Ray coordinates of the apex: g = G^{-1} apex. The lattice points of the
  // cone have coordinates congruent to -g mod 1, coordinatewise; take the
  // smallest admissible value per facet (>= 0 when closed, > 0 when open).
  RatVec t(d);
  for (size_t i = 0; i < d; ++i) {
    BigRat gi(0);
    for (size_t j = 0; j < d; ++j) gi += BigRat(inv[i][j]) * c.apex[j];
    BigRat frac = -gi - BigRat(rat_floor(-gi));
    bool open = !c.open_facet.empty() && c.open_facet[i];
    t[i] = (open && frac == 0) ? BigRat(1) : frac;
  }
  LatticePoint u(d);
  for (size_t j = 0; j < d; ++j) {
    BigRat uj = c.apex[j];
    for (size_t i = 0; i < d; ++i) uj += t[i] * BigRat(c.rays[i][j]);
    if (!is_integer(uj)) throw std::logic_error("unimodular_apex_point: non-integer result");
    u[j] = rat_num(uj);
  }
  return u;
}

}  // namespace detail

std::vector<SimplicialCone> triangulate(const Cone& cone) {
  const auto& gens = cone.generators;
  if (gens.empty()) throw std::invalid_argument("triangulate: cone has no generators");
  for (int t = 1; t <= kMaxTieBreakAttempts; ++t) {
    // Positive combination of all generators: interior of the cone, so every
    // facet of the cone itself stays closed under the half-open rule.
    LatticePoint y(cone.apex.size(), BigInt(0));
    BigInt p(1);
    for (const auto& g : gens) {
      for (size_t j = 0; j < y.size(); ++j) y[j] += p * g[j];
      p *= t;
    }
    try {
      return detail::triangulate_with(cone, y);
    } catch (const detail::DegenerateTieBreak&) {
      continue;
    }
  }
  throw std::logic_error("triangulate: tie-break vector selection failed");
}

std::vector<SimplicialCone> barvinok_decompose(const SimplicialCone& c) {
  size_t d = c.apex.size();
  if (c.rays.size() != d)
    throw std::invalid_argument("barvinok_decompose: ray count must equal dimension");
  std::vector<bool> marks = c.open_facet.empty() ? std::vector<bool>(d, false) : c.open_facet;
  if (marks.size() != d) throw std::invalid_argument("barvinok_decompose: facet mark count mismatch");
  auto normals = inward_facet_normals(c.rays);
  for (int t = 1; t <= kMaxTieBreakAttempts; ++t) {
    // Build y agreeing with the input marks: <n_i, y> = sigma_i * t^(i+1)
    // with sigma_i = -1 on open facets. The normals form a basis, so the
    // system is solvable; clearing denominators keeps the signs.
    linalg::RatVec target(d);
    BigRat tp(t);
    for (size_t i = 0; i < d; ++i) {
      target[i] = marks[i] ? -tp : tp;
      tp *= t;
    }
    auto yq = linalg::solve(IntMat(normals.begin(), normals.end()), target);
    if (!yq) throw std::logic_error("barvinok_decompose: facet normals are not a basis");
    BigInt l(1);
    for (const auto& q : *yq) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    LatticePoint y(d);
    for (size_t i = 0; i < d; ++i) {
      BigRat v = (*yq)[i] * l;
      y[i] = v.get_num();
    }
    std::vector<SimplicialCone> out;
    try {
      detail::decompose_with(c.apex, c.rays, c.sign, y, out);
      return out;
    } catch (const detail::DegenerateTieBreak&) {
      continue;
    }
  }
  throw std::logic_error("barvinok_decompose: tie-break vector selection failed");
}

RationalFunctionSum generating_function(const Polytope& p) {
  if (p.dim == 0) throw std::invalid_argument("generating_function: dimension must be positive");
  auto verts = vertices(p);
  bool bounded = is_bounded(p);
  if (verts.empty()) {
    // Bounded with no vertices certifies emptiness: the generating function
    // is the empty sum. Without boundedness the region is empty or contains
    // a line; no generating function exists either way.
    if (bounded) return RationalFunctionSum{p.dim, {}};
    throw UnboundedError("generating_function: region has no vertices (unbounded or empty)");
  }
  if (!bounded) throw UnboundedError("generating_function: polytope is unbounded");
  if (!is_full_dimensional(p, verts))
    throw DegenerateError(
        "generating_function: polytope is not full-dimensional; eliminate implicit equalities "
        "first");

  RationalFunctionSum g;
  g.dim = p.dim;
  for (const auto& v : verts) {
    Cone tc = tangent_cone(p, v);
    std::vector<SimplicialCone> leaves;
    bool done = false;
    for (int t = 1; t <= kMaxTieBreakAttempts && !done; ++t) {
      LatticePoint y(p.dim, BigInt(0));
      BigInt pw(1);
      for (const auto& gen : tc.generators) {
        for (size_t j = 0; j < p.dim; ++j) y[j] += pw * gen[j];
        pw *= t;
      }
      leaves.clear();
      try {
        // The triangulation marks and the decomposition marks must come from
        // the same tie-break vector for the signed identity to be exact.
        auto pieces = detail::triangulate_with(tc, y);
        for (const auto& piece : pieces)
          detail::decompose_with(piece.apex, piece.rays, piece.sign, y, leaves);
        done = true;
      } catch (const detail::DegenerateTieBreak&) {
        continue;
      }
    }
    if (!done) throw std::logic_error("generating_function: tie-break vector selection failed");
    for (const auto& leaf : leaves) {
      ConeTerm term;
      term.sign = leaf.sign;
      term.u = detail::unimodular_apex_point(leaf);
      term.rays = leaf.rays;
      std::sort(term.rays.begin(), term.rays.end());
      g.terms.push_back(std::move(term));
    }
  }
  std::sort(g.terms.begin(), g.terms.end(), [](const ConeTerm& a, const ConeTerm& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.rays != b.rays) return a.rays < b.rays;
    return a.sign > b.sign;
  });
  return g;
}

BigInt specialize_count(const RationalFunctionSum& g) {
  if (g.terms.empty()) return BigInt(0);
  std::vector<const LatticePoint*> rays;
  for (const auto& term : g.terms)
    for (const auto& r : term.rays) rays.push_back(&r);
  auto lambda = generic_direction(g.dim, rays);

  long T = static_cast<long>(g.dim);
  BigRat total(0);
  for (const auto& term : g.terms) {
    TruncatedSeries prod = series_exp(BigRat(linalg::dot_int(lambda, term.u)), T);
    for (const auto& r : term.rays)
      prod = prod * series_inv_one_minus_exp(BigRat(linalg::dot_int(lambda, r)), 1, T);
    BigRat c = prod.coeff(0);
    total += term.sign > 0 ? c : -c;
  }
  if (!is_integer(total)) throw std::logic_error("specialize_count: non-integer specialization");
  return rat_num(total);
}

}  // namespace lattopt
