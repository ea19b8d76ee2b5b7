#include "lattopt/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lattopt {

Polynomial::Polynomial(size_t d, std::vector<Monomial> ms) : dim(d) {
  std::map<std::vector<unsigned>, BigInt> merged;
  for (auto& m : ms) {
    if (m.exponents.size() != d) throw std::invalid_argument("monomial arity mismatch");
    merged[m.exponents] += m.coeff;
  }
  for (auto& [e, c] : merged)
    if (c != 0) monomials.push_back(Monomial{c, e});
}

Polynomial Polynomial::constant(size_t d, const BigInt& c) {
  return Polynomial(d, {Monomial{c, std::vector<unsigned>(d, 0)}});
}

BigInt Polynomial::max_abs_coeff() const {
  BigInt c(0);
  for (const auto& m : monomials) c = std::max(c, int_abs(m.coeff));
  return c;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& m : monomials) {
    unsigned t = 0;
    for (unsigned e : m.exponents) t += e;
    d = std::max(d, t);
  }
  return d;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  if (a.dim != b.dim) throw std::invalid_argument("polynomial dimension mismatch");
  std::vector<Monomial> ms = a.monomials;
  ms.insert(ms.end(), b.monomials.begin(), b.monomials.end());
  return Polynomial(a.dim, std::move(ms));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.dim != b.dim) throw std::invalid_argument("polynomial dimension mismatch");
  std::vector<Monomial> ms;
  ms.reserve(a.monomials.size() * b.monomials.size());
  for (const auto& ma : a.monomials)
    for (const auto& mb : b.monomials) {
      Monomial m;
      m.coeff = ma.coeff * mb.coeff;
      m.exponents.resize(a.dim);
      for (size_t j = 0; j < a.dim; ++j) m.exponents[j] = ma.exponents[j] + mb.exponents[j];
      ms.push_back(std::move(m));
    }
  return Polynomial(a.dim, std::move(ms));
}

Polynomial poly_scale(const Polynomial& a, const BigInt& c) {
  std::vector<Monomial> ms = a.monomials;
  for (auto& m : ms) m.coeff *= c;
  return Polynomial(a.dim, std::move(ms));
}

Polynomial poly_shift_constant(const Polynomial& a, const BigInt& c) {
  std::vector<Monomial> ms = a.monomials;
  ms.push_back(Monomial{c, std::vector<unsigned>(a.dim, 0)});
  return Polynomial(a.dim, std::move(ms));
}

Polynomial poly_pow(const Polynomial& f, unsigned k) {
  Polynomial acc = Polynomial::constant(f.dim, BigInt(1));
  for (unsigned i = 0; i < k; ++i) acc = poly_mul(acc, f);
  return acc;
}

BigInt evaluate(const Polynomial& f, const LatticePoint& x) {
  if (x.size() != f.dim) throw std::invalid_argument("evaluation arity mismatch");
  BigInt s(0);
  for (const auto& m : f.monomials) {
    BigInt t = m.coeff;
    for (size_t j = 0; j < f.dim; ++j)
      if (m.exponents[j] > 0) t *= int_pow(x[j], m.exponents[j]);
    s += t;
  }
  return s;
}

BigRat evaluate(const Polynomial& f, const RationalPoint& x) {
  if (x.size() != f.dim) throw std::invalid_argument("evaluation arity mismatch");
  BigRat s(0);
  for (const auto& m : f.monomials) {
    BigRat t(m.coeff);
    for (size_t j = 0; j < f.dim; ++j)
      if (m.exponents[j] > 0) t *= rat_pow(x[j], m.exponents[j]);
    s += t;
  }
  return s;
}

Polynomial substitute_affine(const Polynomial& f, const LatticePoint& x0,
                             const std::vector<LatticePoint>& basis) {
  size_t td = basis.size();
  // linear[j] = x0_j + sum_l basis[l][j] t_l as a polynomial in t.
  std::vector<Polynomial> linear(f.dim);
  for (size_t j = 0; j < f.dim; ++j) {
    std::vector<Monomial> ms;
    if (x0[j] != 0) ms.push_back(Monomial{x0[j], std::vector<unsigned>(td, 0)});
    for (size_t l = 0; l < td; ++l) {
      if (basis[l][j] == 0) continue;
      std::vector<unsigned> e(td, 0);
      e[l] = 1;
      ms.push_back(Monomial{basis[l][j], std::move(e)});
    }
    linear[j] = Polynomial(td, std::move(ms));
  }
  Polynomial out = Polynomial::zero(td);
  for (const auto& m : f.monomials) {
    Polynomial term = Polynomial::constant(td, m.coeff);
    for (size_t j = 0; j < f.dim; ++j)
      for (unsigned e = 0; e < m.exponents[j]; ++e) term = poly_mul(term, linear[j]);
    out = poly_add(out, term);
  }
  return out;
}

}  // namespace lattopt
