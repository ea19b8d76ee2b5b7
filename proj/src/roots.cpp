#include "lattopt/roots.hpp"

#include <stdexcept>

namespace lattopt {

static void require_root_args(const BigRat& q, unsigned k) {
  if (k == 0) throw std::invalid_argument("root order k must be >= 1");
  if (q < 0) throw std::domain_error("k-th root of a negative radicand");
}

static BigInt int_root_floor(const BigInt& n, unsigned k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt integer_kth_root_floor(const BigRat& q, unsigned k) {
  require_root_args(q, k);
  // floor(q^(1/k)) = floor(floor(q)^(1/k)): n^k <= q iff n^k <= floor(q).
  return int_root_floor(rat_floor(q), k);
}

BigInt integer_kth_root_ceil(const BigRat& q, unsigned k) {
  require_root_args(q, k);
  BigInt n = integer_kth_root_floor(q, k);
  if (BigRat(int_pow(n, k)) == q) return n;
  return n + 1;
}

RootInterval rational_kth_root_interval(const BigRat& q, unsigned k, const BigRat& precision) {
  require_root_args(q, k);
  if (precision <= 0) throw std::invalid_argument("root precision must be positive");
  RootInterval out;
  out.radicand = q;
  out.k = k;
  // Exact rational roots are detected first (k=1 included).
  BigInt num_root = int_root_floor(q.get_num(), k);
  BigInt den_root = int_root_floor(q.get_den(), k);
  if (int_pow(num_root, k) == q.get_num() && int_pow(den_root, k) == q.get_den()) {
    out.lower = out.upper = make_rat(num_root, den_root);
    return out;
  }
  // One scaled extraction: n = floor(q^(1/k) * S) gives the bracket
  // [n/S, (n+1)/S] of width 1/S <= precision.
  BigInt S = rat_ceil(1 / precision);
  BigInt n = int_root_floor(rat_floor(q * rat_pow(BigRat(S), k)), k);
  out.lower = make_rat(n, S);
  out.upper = make_rat(n + 1, S);
  return out;
}

}  // namespace lattopt
