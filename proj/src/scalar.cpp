#include "qcoact/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace qcoact {

void Scalar::add_term(const Exp3& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exp3{0, 0, 0} &&
         terms_.begin()->second == GaussRational(1);
}

bool Scalar::w_free() const {
  for (const auto& [e, c] : terms_)
    if (e[2] != 0) return false;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

bool operator<(const Scalar& a, const Scalar& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (!(ia->second == ib->second)) {
      if (ia->second.re != ib->second.re) return ia->second.re < ib->second.re;
      return ia->second.im < ib->second.im;
    }
  }
  return ib != b.terms_.end();
}

Scalar Scalar::conj() const {
  Scalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exp3{e[0], e[1], -e[2]}, c.conj());
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return one();
  Scalar base = *this;
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("Scalar::pow: negative power of non-invertible scalar");
    base = *inv;
    e = -e;
  }
  Scalar acc = one();
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

std::optional<Scalar> Scalar::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return monomial({-e[0], -e[1], -e[2]}, GaussRational(1) / c);
}

std::optional<Scalar> Scalar::divide_exact(const Scalar& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (divisor.terms_.size() == 1) {
    const auto& [e, c] = *divisor.terms_.begin();
    Scalar r;
    for (const auto& [ea, ca] : terms_)
      r.terms_.emplace(Exp3{ea[0] - e[0], ea[1] - e[1], ea[2] - e[2]}, ca / c);
    return r;
  }
  // Multivariate division by the divisor's greatest term; exact iff the
  // remainder vanishes.
  Scalar rem = *this, quot;
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  int guard = 4096;
  while (!rem.is_zero() && guard-- > 0) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exp3 de{re[0] - lead_e[0], re[1] - lead_e[1], re[2] - lead_e[2]};
    Scalar piece = monomial(de, rc / lead_c);
    Scalar next = rem - piece * divisor;
    // The leading term must strictly drop or the division cannot be exact.
    if (!next.is_zero() && !(next.terms_.rbegin()->first < re)) return std::nullopt;
    quot += piece;
    rem = next;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::optional<Scalar> Scalar::sqrt_exact() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (!c.is_real() || c.re <= 0) return std::nullopt;
  if (e[0] % 2 || e[1] % 2 || e[2] % 2) return std::nullopt;
  auto root = rational_sqrt(c.re);
  if (!root) return std::nullopt;
  return monomial({e[0] / 2, e[1] / 2, e[2] / 2}, GaussRational(*root));
}

namespace {
GaussRational rat_pow(const Rational& base, int e) {
  Rational b = base;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  Rational acc(1);
  for (int i = 0; i < e; ++i) acc *= b;
  return GaussRational(acc);
}
}  // namespace

GaussRational Scalar::eval(const Rational& t_val, const Rational& u_val,
                           const GaussRational& w_val) const {
  if (t_val <= 0 || u_val <= 0)
    throw std::domain_error("Scalar::eval: t and u must be positive");
  if (w_val.norm() != 1)
    throw std::domain_error("Scalar::eval: w must lie on the unit circle");
  GaussRational acc(0);
  for (const auto& [e, c] : terms_)
    acc += c * rat_pow(t_val, e[0]) * rat_pow(u_val, e[1]) * w_val.pow(e[2]);
  return acc;
}

GaussRational Scalar::eval_tu(const Rational& t_val, const Rational& u_val) const {
  if (!w_free()) throw std::domain_error("Scalar::eval_tu: scalar involves w");
  return eval(t_val, u_val, GaussRational(1));
}

Scalar Scalar::substitute_w(const GaussRational& w_val) const {
  if (w_val.norm() != 1)
    throw std::domain_error("Scalar::substitute_w: w must lie on the unit circle");
  Scalar r;
  for (const auto& [e, c] : terms_) r.add_term({e[0], e[1], 0}, c * w_val.pow(e[2]));
  return r;
}

namespace {
void append_power(std::string& out, const char* even_name, const char* root_name, int e) {
  // t^e printed via q and sqrt(q) so that the parser reads it back; the
  // sqrt factor's exponent is kept at +-1.
  if (e == 0) return;
  int whole = (e >= 0) ? e / 2 : (e + 1) / 2;
  int half = e - 2 * whole;
  auto emit = [&out](const std::string& name, int k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (k != 1) out += "^" + std::to_string(k);
  };
  emit(even_name, whole);
  emit(root_name, half);
}
}  // namespace

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  // Print highest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    GaussRational coef = c;
    std::string piece;
    if (!first) piece += " ";
    bool negated = false;
    if ((coef.is_real() && coef.re < 0) || (coef.re == 0 && coef.im < 0)) {
      negated = true;
      coef = -coef;
    }
    if (first)
      piece += negated ? "-" : "";
    else
      piece += negated ? "- " : "+ ";
    std::string body;
    bool coef_is_one = coef == GaussRational(1);
    if (!coef_is_one) {
      std::string cs = coef.str();
      if (!coef.is_real() && (coef.re != 0)) cs = "(" + cs + ")";
      body += cs;
    }
    append_power(body, "q", "sqrt(q)", e[0]);
    append_power(body, "p", "sqrt(p)", e[1]);
    if (e[2] != 0) {
      if (!body.empty()) body += "*";
      body += "w";
      if (e[2] != 1) body += "^" + std::to_string(e[2]);
    }
    if (body.empty()) body = "1";
    piece += body;
    out += piece;
    first = false;
  }
  return out;
}

}  // namespace qcoact
