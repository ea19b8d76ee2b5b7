#pragma once

#include <vector>

#include "lattopt/rational.hpp"

namespace lattopt {

// Truncated Laurent series in one variable s. A series knows its leading
// order (possibly negative) and the highest order it is exact through; all
// arithmetic propagates the truncation order so a coefficient is never read
// past what is actually known.
class TruncatedSeries {
 public:
  // Zero series, exact through s^trunc.
  explicit TruncatedSeries(long trunc) : lead_(trunc + 1), trunc_(trunc) {}

  // coeffs[i] is the coefficient of s^(lead+i); exact through s^trunc.
  TruncatedSeries(long lead, long trunc, std::vector<BigRat> coeffs);

  long lead() const { return lead_; }
  long truncation_order() const { return trunc_; }

  // Coefficient of s^k; requires k <= truncation_order().
  const BigRat& coeff(long k) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const BigRat& c) const;
  TruncatedSeries shifted(long by) const;  // multiply by s^by

  // Integer power by repeated multiplication; e >= 1.
  TruncatedSeries pow(unsigned e) const;

  bool is_zero() const;

 private:
  void normalize();

  long lead_;
  long trunc_;
  std::vector<BigRat> coeffs_;  // size trunc_-lead_+1 (empty means zero)

  static const BigRat kZero;
};

// exp(c*s) through s^trunc, trunc >= 0.
TruncatedSeries series_exp(const BigRat& c, long trunc);

// (1 - exp(c*s))^(-m) for c != 0, m >= 1: a Laurent series starting at order
// -m, exact through s^trunc.
TruncatedSeries series_inv_one_minus_exp(const BigRat& c, unsigned m, long trunc);

// Coefficients of h(x) = x/(exp(x)-1) = sum h_n x^n, computed by the
// recurrence h(x)*(exp(x)-1)/x = 1 and cached process-wide. Returns h_0..h_n.
std::vector<BigRat> h_series_coefficients(unsigned n);

}  // namespace lattopt
