#include "lattopt/genfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "lattopt/linalg.hpp"
#include "lattopt/series.hpp"

namespace lattopt {

namespace {

using TermKey = std::tuple<std::vector<LatticePoint>, std::vector<unsigned>, LatticePoint>;
using TermMap = std::map<TermKey, BigInt>;

void add_term(TermMap& m, const std::vector<LatticePoint>& rays, const std::vector<unsigned>& mults,
              const LatticePoint& u, const BigInt& c) {
  if (c == 0) return;
  TermKey k{rays, mults, u};
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

GeneralizedSum from_map(size_t dim, const TermMap& m) {
  GeneralizedSum out;
  out.dim = dim;
  out.terms.reserve(m.size());
  for (const auto& [k, c] : m) {
    GeneralizedTerm t;
    t.coeff = c;
    t.rays = std::get<0>(k);
    t.mults = std::get<1>(k);
    t.u = std::get<2>(k);
    out.terms.push_back(std::move(t));
  }
  return out;
}

// Dense nonnegative-order series with integer coefficients over a common
// denominator; the workhorse of the specialization inner loop (rational
// arithmetic would spend most of its time in gcds).
struct ClearedSeries {
  std::vector<BigInt> a;  // coefficients of s^0..s^(len-1)
  BigInt den = 1;
};

void reduce_content(ClearedSeries& s) {
  BigInt g = s.den;
  for (const auto& x : s.a) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 1 || g == 0) return;
  for (auto& x : s.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(s.den.get_mpz_t(), s.den.get_mpz_t(), g.get_mpz_t());
}

ClearedSeries convolve(const ClearedSeries& x, const ClearedSeries& y, size_t len) {
  ClearedSeries out;
  out.a.assign(len, BigInt(0));
  out.den = x.den * y.den;
  size_t nx = std::min(len, x.a.size());
  for (size_t i = 0; i < nx; ++i) {
    if (x.a[i] == 0) continue;
    size_t ny = std::min(len - i, y.a.size());
    for (size_t j = 0; j < ny; ++j) out.a[i + j] += x.a[i] * y.a[j];
  }
  reduce_content(out);
  return out;
}

}  // namespace

GeneralizedSum lift(const RationalFunctionSum& g) {
  TermMap m;
  for (const auto& term : g.terms) {
    std::map<LatticePoint, unsigned> by_ray;
    for (const auto& r : term.rays) ++by_ray[r];
    std::vector<LatticePoint> rays;
    std::vector<unsigned> mults;
    rays.reserve(by_ray.size());
    mults.reserve(by_ray.size());
    for (const auto& [r, mult] : by_ray) {
      rays.push_back(r);
      mults.push_back(mult);
    }
    add_term(m, rays, mults, term.u, BigInt(term.sign));
  }
  return from_map(g.dim, m);
}

GeneralizedSum apply_euler_operator(const GeneralizedSum& g, size_t var) {
  if (var >= g.dim) throw std::invalid_argument("apply_euler_operator: variable out of range");
  TermMap m;
  for (const auto& t : g.terms) {
    if (t.u[var] != 0) add_term(m, t.rays, t.mults, t.u, t.coeff * t.u[var]);
    for (size_t j = 0; j < t.rays.size(); ++j) {
      const BigInt& vji = t.rays[j][var];
      if (vji == 0) continue;
      std::vector<unsigned> mults = t.mults;
      ++mults[j];
      LatticePoint u = t.u;
      for (size_t c = 0; c < g.dim; ++c) u[c] += t.rays[j][c];
      add_term(m, t.rays, mults, u, t.coeff * t.mults[j] * vji);
    }
  }
  return from_map(g.dim, m);
}

namespace {

GeneralizedSum apply_exponents(const GeneralizedSum& g, const std::vector<unsigned>& exponents) {
  if (exponents.size() != g.dim) throw std::invalid_argument("apply_monomial: exponent size mismatch");
  GeneralizedSum cur = g;
  for (size_t var = 0; var < exponents.size(); ++var)
    for (unsigned e = 0; e < exponents[var]; ++e) cur = apply_euler_operator(cur, var);
  return cur;
}

}  // namespace

GeneralizedSum apply_monomial(const GeneralizedSum& g, const Monomial& mono) {
  GeneralizedSum cur = apply_exponents(g, mono.exponents);
  if (mono.coeff == 1) return cur;
  TermMap m;
  for (const auto& t : cur.terms) add_term(m, t.rays, t.mults, t.u, t.coeff * mono.coeff);
  return from_map(g.dim, m);
}

GeneralizedSum apply_polynomial(const GeneralizedSum& g, const Polynomial& f) {
  if (f.dim != g.dim) throw std::invalid_argument("apply_polynomial: dimension mismatch");
  TermMap acc;
  for (const auto& mono : f.monomials) {
    GeneralizedSum part = apply_exponents(g, mono.exponents);
    for (const auto& t : part.terms) add_term(acc, t.rays, t.mults, t.u, t.coeff * mono.coeff);
  }
  return from_map(g.dim, acc);
}

namespace {

// H_n = [x^n] e^x h(x) = sum_{l<=n} h_l/(n-l)!, cleared to integers over a
// common denominator L. q_j(s) = e^{c_j s} h(c_j s) then has coefficients
// c_j^n * HL_n / L, independent tables per ray value.
struct ClearedH {
  std::vector<BigInt> HL;
  BigInt L = 1;
};

ClearedH cleared_h_table(size_t max) {
  auto h = h_series_coefficients(static_cast<unsigned>(max));
  std::vector<BigRat> H(max + 1, BigRat(0));
  for (size_t n = 0; n <= max; ++n)
    for (size_t l = 0; l <= n; ++l)
      H[n] += h[l] / BigRat(factorial(static_cast<unsigned long>(n - l)));
  ClearedH out;
  for (const auto& q : H) mpz_lcm(out.L.get_mpz_t(), out.L.get_mpz_t(), q.get_den().get_mpz_t());
  out.HL.resize(max + 1);
  for (size_t n = 0; n <= max; ++n) {
    BigRat v = H[n] * out.L;
    out.HL[n] = v.get_num();
  }
  return out;
}

using GroupEntry = std::pair<const std::vector<unsigned>*, const BigInt*>;  // (mults, coeff)

// Substituting z = e^{lambda s} turns a term with multiplicities m into
//   coeff * prod_j (-1/c_j)^{m_j} * s^{-M} * e^{b s} * prod_j q_j(s)^{m_j}
// with M = sum m_j; the value at z = 1 is the s^M coefficient of the
// analytic part. All entries here share rays (hence c) and base exponent b,
// so they share all power tables; ray 0 is folded with e^{b s} so that
// two-ray extraction is a single O(M) dot product.
BigRat eval_group(const std::vector<BigInt>& c, const BigInt& b,
                  const std::vector<GroupEntry>& entries, const ClearedH& ch) {
  size_t r = c.size();
  size_t group_max = 0;
  std::vector<unsigned> max_mult(r, 0);
  for (const auto& [mults, coeff] : entries) {
    size_t M = 0;
    for (size_t j = 0; j < r; ++j) {
      max_mult[j] = std::max(max_mult[j], (*mults)[j]);
      M += (*mults)[j];
    }
    group_max = std::max(group_max, M);
  }
  size_t len = group_max + 1;

  // Base factor e^{b s} cleared over group_max!.
  ClearedSeries base;
  base.a.resize(len);
  base.den = factorial(static_cast<unsigned long>(group_max));
  {
    std::vector<BigInt> fall(len);  // group_max!/n!
    fall[len - 1] = 1;
    for (size_t n = len - 1; n > 0; --n)
      fall[n - 1] = fall[n] * BigInt(static_cast<unsigned long>(n));
    BigInt bp(1);
    for (size_t n = 0; n < len; ++n) {
      base.a[n] = bp * fall[n];
      bp *= b;
    }
    reduce_content(base);
  }

  auto make_q = [&](size_t j) {
    ClearedSeries q;
    q.a.resize(len);
    q.den = ch.L;
    BigInt cp(1);
    for (size_t n = 0; n < len; ++n) {
      q.a[n] = cp * ch.HL[n];
      cp *= c[j];
    }
    reduce_content(q);
    return q;
  };
  std::vector<std::vector<ClearedSeries>> pw(r);
  for (size_t j = 0; j < r; ++j) {
    ClearedSeries q = make_q(j);
    pw[j].resize(max_mult[j] + 1);
    if (j == 0) {
      pw[j][0] = base;
      for (unsigned m = 1; m <= max_mult[j]; ++m) pw[j][m] = convolve(pw[j][m - 1], q, len);
    } else {
      pw[j][1] = q;
      for (unsigned m = 2; m <= max_mult[j]; ++m) pw[j][m] = convolve(pw[j][m - 1], q, len);
    }
  }

  BigRat total(0);
  for (const auto& [mults, coeff] : entries) {
    size_t M = 0;
    for (auto m : *mults) M += m;
    BigInt num;
    BigInt den;
    if (r == 1) {
      num = pw[0][(*mults)[0]].a[M];
      den = pw[0][(*mults)[0]].den;
    } else {
      const ClearedSeries* acc = &pw[0][(*mults)[0]];
      ClearedSeries tmp;
      for (size_t j = 1; j + 1 < r; ++j) {
        tmp = convolve(*acc, pw[j][(*mults)[j]], M + 1);
        acc = &tmp;
      }
      const ClearedSeries& last = pw[r - 1][(*mults)[r - 1]];
      num = 0;
      size_t na = std::min(acc->a.size(), M + 1);
      for (size_t x = 0; x < na; ++x) {
        size_t y = M - x;
        if (y < last.a.size() && acc->a[x] != 0 && last.a[y] != 0) num += acc->a[x] * last.a[y];
      }
      den = acc->den * last.den;
    }
    // Laurent prefactor prod_j (-1/c_j)^{m_j}.
    BigInt cd(1);
    for (size_t j = 0; j < r; ++j) cd *= int_pow(c[j], (*mults)[j]);
    if (M % 2 == 1) cd = -cd;
    total += BigRat(*coeff) * make_rat(num, den * cd);
  }
  return total;
}

}  // namespace

BigRat specialize_at_one(const GeneralizedSum& g) {
  if (g.terms.empty()) return BigRat(0);
  std::vector<const LatticePoint*> rays;
  for (const auto& t : g.terms)
    for (const auto& r : t.rays) rays.push_back(&r);
  auto lambda = generic_direction(g.dim, rays);

  // Terms sharing (rays, b) with b = <lambda, u> - sum_j m_j c_j share their
  // power tables.
  struct GroupKey {
    std::vector<LatticePoint> rays;
    BigInt b;
    bool operator<(const GroupKey& o) const {
      if (rays != o.rays) return rays < o.rays;
      return b < o.b;
    }
  };
  std::map<GroupKey, std::vector<size_t>> groups;
  size_t global_max = 0;
  for (size_t i = 0; i < g.terms.size(); ++i) {
    const auto& t = g.terms[i];
    BigInt b = linalg::dot_int(lambda, t.u);
    size_t M = 0;
    for (size_t j = 0; j < t.rays.size(); ++j) {
      b -= BigInt(t.mults[j]) * linalg::dot_int(lambda, t.rays[j]);
      M += t.mults[j];
    }
    global_max = std::max(global_max, M);
    groups[GroupKey{t.rays, std::move(b)}].push_back(i);
  }

  ClearedH ch = cleared_h_table(global_max);
  BigRat total(0);
  for (const auto& [key, idxs] : groups) {
    std::vector<BigInt> c(key.rays.size());
    for (size_t j = 0; j < key.rays.size(); ++j) c[j] = linalg::dot_int(lambda, key.rays[j]);
    std::vector<GroupEntry> entries;
    entries.reserve(idxs.size());
    for (size_t i : idxs) entries.push_back({&g.terms[i].mults, &g.terms[i].coeff});
    total += eval_group(c, key.b, entries, ch);
  }
  return total;
}

namespace {

constexpr unsigned kPackBits = 16;
constexpr std::uint64_t kPackMask = (1u << kPackBits) - 1;

inline unsigned unpack_mult(std::uint64_t key, size_t j) {
  return static_cast<unsigned>((key >> (kPackBits * j)) & kPackMask);
}

}  // namespace

PowerEngine::PowerEngine(const RationalFunctionSum& gf, Polynomial objective)
    : dim_(gf.dim), objective_(std::move(objective)) {
  if (objective_.dim != dim_)
    throw std::invalid_argument("PowerEngine: dimension mismatch between sum and objective");
  // One block per distinct (sorted rays, u); signs of coinciding terms merge.
  std::map<std::pair<std::vector<LatticePoint>, LatticePoint>, BigInt> merged;
  for (const auto& t : gf.terms) {
    if (t.rays.size() > 64 / kPackBits)
      throw std::invalid_argument("PowerEngine: more than 4 rays per cone is unsupported");
    std::vector<LatticePoint> rays = t.rays;
    std::sort(rays.begin(), rays.end());
    merged[{std::move(rays), t.u}] += t.sign;
  }
  std::vector<const LatticePoint*> all_rays;
  for (const auto& [key, sign] : merged)
    for (const auto& r : key.first) all_rays.push_back(&r);
  lambda_ = generic_direction(dim_, all_rays);
  for (auto& [key, sign] : merged) {
    if (sign == 0) continue;
    Block blk;
    blk.rays = key.first;
    blk.u0 = key.second;
    blk.c.resize(blk.rays.size());
    blk.b = linalg::dot_int(lambda_, blk.u0);
    std::uint64_t ones = 0;
    for (size_t j = 0; j < blk.rays.size(); ++j) {
      blk.c[j] = linalg::dot_int(lambda_, blk.rays[j]);
      blk.b -= blk.c[j];
      ones |= std::uint64_t{1} << (kPackBits * j);
    }
    blk.state.emplace(ones, sign);
    blocks_.push_back(std::move(blk));
  }
  BigRat n = evaluate();
  if (!is_integer(n)) throw std::logic_error("PowerEngine: point count is not integral");
  count_ = n.get_num();
}

void PowerEngine::step() {
  BigInt uv, tmp;
  for (auto& blk : blocks_) {
    const size_t r = blk.rays.size();
    State acc;
    acc.reserve(blk.state.size() * 2 + 8);
    State scratch[2];
    for (const auto& mono : objective_.monomials) {
      const State* src = &blk.state;
      int flip = 0;
      for (size_t var = 0; var < dim_; ++var) {
        for (unsigned e = 0; e < mono.exponents[var]; ++e) {
          State& next = scratch[flip];
          next.clear();
          next.reserve(src->size() + src->size() / 2 + 8);
          for (const auto& [key, coeff] : *src) {
            // uv = u0[var] + sum_j (m_j - 1) v_{j,var}, built without
            // temporaries; applying z_var d/d z_var sends the term to
            // uv * itself + sum_j m_j v_{j,var} * (m_j -> m_j + 1).
            mpz_set(uv.get_mpz_t(), blk.u0[var].get_mpz_t());
            for (size_t j = 0; j < r; ++j) {
              unsigned mj = unpack_mult(key, j);
              if (mj > 1)
                mpz_addmul_ui(uv.get_mpz_t(), blk.rays[j][var].get_mpz_t(), mj - 1);
            }
            if (uv != 0)
              mpz_addmul(next[key].get_mpz_t(), coeff.get_mpz_t(), uv.get_mpz_t());
            for (size_t j = 0; j < r; ++j) {
              const BigInt& vj = blk.rays[j][var];
              if (vj == 0) continue;
              unsigned mj = unpack_mult(key, j);
              if (mj == kPackMask) throw std::logic_error("PowerEngine: multiplicity overflow");
              mpz_mul_ui(tmp.get_mpz_t(), vj.get_mpz_t(), mj);
              mpz_addmul(next[key + (std::uint64_t{1} << (kPackBits * j))].get_mpz_t(),
                         coeff.get_mpz_t(), tmp.get_mpz_t());
            }
          }
          src = &next;
          flip ^= 1;
        }
      }
      if (src == &blk.state) {  // constant monomial
        for (const auto& [key, coeff] : *src)
          mpz_addmul(acc[key].get_mpz_t(), coeff.get_mpz_t(), mono.coeff.get_mpz_t());
      } else {
        State& last = scratch[flip ^ 1];  // the scratch buffer src points at
        for (auto& [key, coeff] : last) {
          if (coeff == 0) continue;
          coeff *= mono.coeff;
          acc[key] += coeff;
        }
      }
    }
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second == 0 ? acc.erase(it) : std::next(it);
    blk.state = std::move(acc);
  }
}

BigRat PowerEngine::evaluate() const {
  size_t global_max = 0;
  for (const auto& blk : blocks_) {
    const size_t r = blk.rays.size();
    for (const auto& [key, coeff] : blk.state) {
      size_t M = 0;
      for (size_t j = 0; j < r; ++j) M += unpack_mult(key, j);
      global_max = std::max(global_max, M);
    }
  }
  ClearedH ch = cleared_h_table(global_max);
  BigRat total(0);
  std::vector<std::vector<unsigned>> decoded;
  for (const auto& blk : blocks_) {
    if (blk.state.empty()) continue;
    const size_t r = blk.rays.size();
    decoded.clear();
    decoded.reserve(blk.state.size());
    std::vector<GroupEntry> entries;
    entries.reserve(blk.state.size());
    for (const auto& [key, coeff] : blk.state) {
      std::vector<unsigned> m(r);
      for (size_t j = 0; j < r; ++j) m[j] = unpack_mult(key, j);
      decoded.push_back(std::move(m));
      entries.push_back({&decoded.back(), &coeff});
    }
    total += eval_group(blk.c, blk.b, entries, ch);
  }
  return total;
}

const BigRat& PowerEngine::sum(unsigned k) {
  if (k == 0) throw std::invalid_argument("PowerEngine::sum: k must be >= 1");
  for (unsigned i = steps_ + 1; i < k; ++i) sum_at(i);
  return sum_at(k);
}

const BigRat& PowerEngine::sum_at(unsigned k) {
  if (k == 0) throw std::invalid_argument("PowerEngine::sum_at: k must be >= 1");
  auto it = sums_.find(k);
  if (it != sums_.end()) return it->second;
  if (steps_ > k) throw std::invalid_argument("PowerEngine::sum_at: rung already passed unevaluated");
  while (steps_ < k) {
    step();
    ++steps_;
  }
  return sums_.emplace(k, evaluate()).first->second;
}

}  // namespace lattopt
