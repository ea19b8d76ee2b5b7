#include "lattopt/rational.hpp"

#include <cctype>

namespace lattopt {

std::string rat_to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_to_string(const BigInt& n) { return n.get_str(); }

static bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::optional<BigRat> rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) return std::nullopt;
    return BigRat(BigInt(text, 10));
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) return std::nullopt;
  BigInt d(den, 10);
  if (d == 0) return std::nullopt;
  return make_rat(BigInt(num, 10), d);
}

std::string decimal_string(const BigRat& q, unsigned digits) {
  BigInt scale = int_pow(BigInt(10), digits);
  BigInt num = q.get_num() * scale, den = q.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) quot += 1;
  std::string s = quot.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && quot != 0) s.insert(0, "-");
  return s;
}

}  // namespace lattopt
