#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "qcoact/rational.hpp"

namespace qcoact {

/// Exponents of (t, u, w) where t = sqrt(q), u = sqrt(p) and w is the unit
/// parameter with conj(w) = w^-1.
using Exp3 = std::array<int, 3>;

/// Laurent polynomial in t, u, w over the Gaussian rationals, kept in
/// canonical form: no zero coefficients are stored, so two scalars are equal
/// iff their term maps are identical.
class Scalar {
 public:
  using Terms = std::map<Exp3, GaussRational>;

  Scalar() = default;
  explicit Scalar(const Rational& r) { add_term({0, 0, 0}, GaussRational(r)); }
  explicit Scalar(const GaussRational& g) { add_term({0, 0, 0}, g); }
  Scalar(long n) { add_term({0, 0, 0}, GaussRational(n)); }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar imag() { return Scalar(GaussRational::i()); }
  /// t^e (= q^{e/2})
  static Scalar t(int e = 1) { return monomial({e, 0, 0}); }
  /// u^e (= p^{e/2})
  static Scalar u(int e = 1) { return monomial({0, e, 0}); }
  /// w^e
  static Scalar w(int e = 1) { return monomial({0, 0, e}); }
  /// q^e = t^{2e}
  static Scalar q(int e = 1) { return monomial({2 * e, 0, 0}); }
  /// p^e = u^{2e}
  static Scalar p(int e = 1) { return monomial({0, 2 * e, 0}); }
  static Scalar monomial(Exp3 e, GaussRational c = GaussRational(1)) {
    Scalar s;
    s.add_term(e, c);
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// True when no term carries a w exponent.
  bool w_free() const;

  void add_term(const Exp3& e, const GaussRational& c);

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);  // arbitrary total order for maps

  /// Conjugation: coefficients conjugated, w exponent negated.
  Scalar conj() const;

  Scalar pow(int e) const;

  /// Multiplicative inverse, defined for single-term scalars only.
  std::optional<Scalar> inverse() const;

  /// Exact division; nullopt when the quotient is not a Laurent polynomial.
  std::optional<Scalar> divide_exact(const Scalar& divisor) const;

  /// Exact square root for a single positive-real-coefficient term with even
  /// exponents (covers the c in |x|^2 = c family emission).
  std::optional<Scalar> sqrt_exact() const;

  /// Evaluation at t = t_val > 0, u = u_val > 0, w = w_val with |w_val| = 1.
  GaussRational eval(const Rational& t_val, const Rational& u_val,
                     const GaussRational& w_val) const;
  /// Evaluation of a w-free scalar (throws if w occurs).
  GaussRational eval_tu(const Rational& t_val, const Rational& u_val) const;

  /// Substitute w := w_val (|w_val| = 1), folding the w powers into
  /// coefficients; t and u stay symbolic.
  Scalar substitute_w(const GaussRational& w_val) const;

  /// Renders in the textual scalar syntax accepted by the parser.
  std::string str() const;

 private:
  Terms terms_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

}  // namespace qcoact
