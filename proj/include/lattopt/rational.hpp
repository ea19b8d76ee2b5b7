#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattopt {

// Exact arithmetic backbone. BigRat values are always canonical: reduced to
// lowest terms with positive denominator (gmpxx maintains this for results of
// arithmetic; parsing and raw construction canonicalize explicitly).
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt rat_num(const BigRat& q) { return q.get_num(); }
inline BigInt rat_den(const BigRat& q) { return q.get_den(); }

// floor(a/b) for exact integers, b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt rat_floor(const BigRat& q) { return floor_div(q.get_num(), q.get_den()); }
inline BigInt rat_ceil(const BigRat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRat rat_pow(const BigRat& base, unsigned long e) {
  return BigRat(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

inline BigInt int_abs(const BigInt& a) { return abs(a); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Serializes as "p" for integers, "p/q" otherwise; parse accepts both forms.
std::string rat_to_string(const BigRat& q);
std::optional<BigRat> rat_from_string(const std::string& text);

// Decimal rendering, correctly rounded to `digits` places after the point
// (ties away from zero). Exact: never goes through floating point.
std::string decimal_string(const BigRat& q, unsigned digits);

std::string int_to_string(const BigInt& n);

}  // namespace lattopt
