#include "qcoact/rational.hpp"

namespace qcoact {

GaussRational GaussRational::pow(long e) const {
  if (e == 0) return GaussRational(1);
  GaussRational base = *this;
  if (e < 0) {
    base = GaussRational(1) / base;
    e = -e;
  }
  GaussRational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

std::string GaussRational::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (re != 0) s += re.get_str();
  if (im != 0) {
    if (!s.empty() && im > 0) s += "+";
    if (im == -1)
      s += "-";
    else if (im != 1)
      s += im.get_str() + "*";
    s += "i";
  }
  return s;
}

}  // namespace qcoact
