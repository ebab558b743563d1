#pragma once

#include <map>
#include <string>

#include "qcoact/scalar.hpp"
#include "qcoact/word.hpp"

namespace qcoact {

/// Free *-algebra element over a coefficient ring C: a finite map from words
/// to nonzero coefficients. C is Scalar in the algebra modules and UPoly in
/// the constraint generator.
template <class C>
class Poly {
 public:
  using Terms = std::map<Word, C, WordLess>;

  Poly() = default;
  explicit Poly(const Word& word, C coeff = C(1)) { add(word, coeff); }

  static Poly unit(C coeff = C(1)) { return Poly(Word{}, coeff); }
  static Poly gen(std::uint8_t index, bool starred = false, C coeff = C(1)) {
    return Poly(Word::gen(index, starred), coeff);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add(const Word& word, const C& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
      terms_.emplace(word, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const C* coeff(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? nullptr : &it->second;
  }

  Poly operator-() const {
    Poly r;
    for (const auto& [word, coeff] : terms_) r.terms_.emplace(word, -coeff);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [word, coeff] : b.terms_) r.add(word, coeff);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [word, coeff] : b.terms_) r.add(word, -coeff);
    return r;
  }
  /// Bilinear concatenation product in the free algebra (no rewriting).
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa.concat(wb), ca * cb);
    return r;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [word, coeff] : o.terms_) add(word, coeff);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [word, coeff] : o.terms_) add(word, -coeff);
    return *this;
  }

  Poly scaled(const C& c) const {
    Poly r;
    for (const auto& [word, coeff] : terms_) r.add(word, coeff * c);
    return r;
  }

  /// Anti-linear involution: words reversed with stars flipped, coefficients
  /// conjugated.
  Poly adjoint() const {
    Poly r;
    for (const auto& [word, coeff] : terms_) r.add(word.adjoint(), coeff.conj());
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  Terms terms_;
};

using Element = Poly<Scalar>;

template <class C>
std::string Poly<C>::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string cs = it->second.str();
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
        cs.find('+') == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool trivial_coeff = (cs == "1") && !it->first.empty();
    bool needs_parens = it->second.term_count() > 1;
    if (!trivial_coeff) out += needs_parens ? "(" + cs + ")" : cs;
    if (!it->first.empty()) {
      if (!trivial_coeff) out += "*";
      out += it->first.str(names);
    }
  }
  return out;
}

}  // namespace qcoact
