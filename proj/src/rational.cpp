#include "linfty/rational.hpp"

#include <cctype>

namespace linfty {

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
  mpz_class n(num), d(den);
  if (sgn(d) == 0) {
    fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  }
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, int exp) {
  if (exp == 0) return Rat(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-(long)exp)
                           : static_cast<unsigned long>(exp);
  if (invert && rat_is_zero(base)) {
    fail(ErrorCode::ParseError, "negative power of zero");
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rat r = invert ? Rat(den, num) : Rat(num, den);
  r.canonicalize();
  return r;
}

Rat inv_factorial(int n) {
  mpz_class f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  Rat r(mpz_class(1), f);
  r.canonicalize();
  return r;
}

}  // namespace linfty
