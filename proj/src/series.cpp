#include "lattopt/series.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace lattopt {

const BigRat TruncatedSeries::kZero = BigRat(0);

TruncatedSeries::TruncatedSeries(long lead, long trunc, std::vector<BigRat> coeffs)
    : lead_(lead), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (static_cast<long>(coeffs_.size()) != trunc_ - lead_ + 1)
    throw std::invalid_argument("series coefficient count does not match order range");
  normalize();
}

void TruncatedSeries::normalize() {
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
  if (drop > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + drop);
    lead_ += static_cast<long>(drop);
  }
  if (coeffs_.empty()) lead_ = trunc_ + 1;
}

const BigRat& TruncatedSeries::coeff(long k) const {
  if (k > trunc_) throw std::out_of_range("coefficient beyond truncation order");
  if (k < lead_ || k > trunc_) return kZero;
  return coeffs_[static_cast<size_t>(k - lead_)];
}

bool TruncatedSeries::is_zero() const { return coeffs_.empty(); }

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  long trunc = std::min(trunc_, o.trunc_);
  long lead = std::min(lead_, o.lead_);
  if (lead > trunc) return TruncatedSeries(trunc);
  std::vector<BigRat> out(static_cast<size_t>(trunc - lead + 1), BigRat(0));
  for (long k = lead; k <= trunc; ++k) {
    BigRat v(0);
    if (k >= lead_ && k <= trunc_) v += coeffs_[static_cast<size_t>(k - lead_)];
    if (k >= o.lead_ && k <= o.trunc_) v += o.coeffs_[static_cast<size_t>(k - o.lead_)];
    out[static_cast<size_t>(k - lead)] = v;
  }
  return TruncatedSeries(lead, trunc, std::move(out));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  // The product is exact through min(trunc_a + lead_b, trunc_b + lead_a):
  // the first unknown coefficient of either factor enters at that order + 1.
  long trunc = std::min(trunc_ + o.lead_, o.trunc_ + lead_);
  if (is_zero() || o.is_zero()) return TruncatedSeries(trunc);
  long lead = lead_ + o.lead_;
  if (lead > trunc) return TruncatedSeries(trunc);
  std::vector<BigRat> out(static_cast<size_t>(trunc - lead + 1), BigRat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    long oi = lead_ + static_cast<long>(i);
    if (oi + o.lead_ > trunc) break;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      long k = oi + o.lead_ + static_cast<long>(j);
      if (k > trunc) break;
      out[static_cast<size_t>(k - lead)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return TruncatedSeries(lead, trunc, std::move(out));
}

TruncatedSeries TruncatedSeries::scaled(const BigRat& c) const {
  if (c == 0) return TruncatedSeries(trunc_);
  std::vector<BigRat> out = coeffs_;
  for (auto& x : out) x *= c;
  return TruncatedSeries(lead_, trunc_, std::move(out));
}

TruncatedSeries TruncatedSeries::shifted(long by) const {
  TruncatedSeries r = *this;
  r.lead_ += by;
  r.trunc_ += by;
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  if (e == 0) throw std::invalid_argument("series pow requires e >= 1");
  TruncatedSeries acc = *this;
  for (unsigned i = 1; i < e; ++i) acc = acc * *this;
  return acc;
}

TruncatedSeries series_exp(const BigRat& c, long trunc) {
  if (trunc < 0) return TruncatedSeries(trunc);
  std::vector<BigRat> out(static_cast<size_t>(trunc) + 1);
  out[0] = 1;
  for (long n = 1; n <= trunc; ++n) out[static_cast<size_t>(n)] = out[static_cast<size_t>(n - 1)] * c / n;
  return TruncatedSeries(0, trunc, std::move(out));
}

std::vector<BigRat> h_series_coefficients(unsigned n) {
  static std::vector<BigRat> cache{BigRat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // h_k solves sum_{i<=k} h_i / (k-i+1)! = [k==0], from h(x)*(e^x-1)/x = 1.
  while (cache.size() <= n) {
    unsigned k = static_cast<unsigned>(cache.size());
    BigRat acc(0);
    for (unsigned i = 0; i < k; ++i) acc += cache[i] / BigRat(factorial(k - i + 1));
    cache.push_back(-acc);
  }
  return std::vector<BigRat>(cache.begin(), cache.begin() + n + 1);
}

TruncatedSeries series_inv_one_minus_exp(const BigRat& c, unsigned m, long trunc) {
  if (c == 0) throw std::domain_error("1/(1-exp(c s)) requires c != 0");
  if (m == 0) throw std::invalid_argument("inverse power m must be >= 1");
  // 1/(1-e^{cs}) = (-1/(cs)) * h(cs), so the m-th power starts at s^{-m}.
  long horder = trunc + static_cast<long>(m);
  if (horder < 0) return TruncatedSeries(trunc);
  auto h = h_series_coefficients(static_cast<unsigned>(horder));
  std::vector<BigRat> coeffs(h.size());
  BigRat cp(1);
  for (size_t i = 0; i < h.size(); ++i) {
    coeffs[i] = h[i] * cp;
    cp *= c;
  }
  TruncatedSeries hc(0, horder, std::move(coeffs));
  TruncatedSeries p = (m == 1) ? hc : hc.pow(m);
  BigRat scale = rat_pow(BigRat(-1) / c, m);
  return p.scaled(scale).shifted(-static_cast<long>(m));
}

}  // namespace lattopt
