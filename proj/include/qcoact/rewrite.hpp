#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>

#include "qcoact/presentation.hpp"

namespace qcoact {

/// Step cap exceeded during normalization; never a silent truncation.
struct FuelExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a rewrite step fails to decrease the term order on an
/// oriented presentation (internal invariant).
struct DescentViolation : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

namespace detail {

/// Leftmost redex in `word`: position plus matching rule index.
inline bool find_redex(const Word& word, const Presentation& pres, std::size_t& pos_out,
                       std::size_t& rule_out) {
  const auto& letters = word.letters();
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    for (std::size_t ri = 0; ri < pres.rules.size(); ++ri) {
      const Word& lhs = pres.rules[ri].lhs;
      if (lhs.degree() > letters.size() - pos) continue;
      bool match = true;
      for (std::size_t k = 0; k < lhs.degree(); ++k)
        if (!(letters[pos + k] == lhs.at(k))) {
          match = false;
          break;
        }
      if (match) {
        pos_out = pos;
        rule_out = ri;
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// Rewrites until no word contains any rule lhs as a contiguous subword.
/// Strategy: the greatest reducible word of the element, leftmost redex
/// first. Each step on an oriented presentation strictly decreases the word
/// multiset; this is asserted per produced word.
template <class C>
Poly<C> normalize(Poly<C> e, const Presentation& pres, std::uint64_t fuel = kDefaultFuel) {
  std::set<std::vector<Letter>> irreducible;
  for (;;) {
    // Greatest reducible word. Terms are stored in the default order, which
    // is the presentation order unless a custom precedence was declared.
    const Word* target = nullptr;
    std::size_t pos = 0, ri = 0;
    if (pres.order.is_default()) {
      for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        if (irreducible.count(it->first.letters())) continue;
        if (detail::find_redex(it->first, pres, pos, ri)) {
          target = &it->first;
          break;
        }
        irreducible.insert(it->first.letters());
      }
    } else {
      for (const auto& [word, coeff] : e.terms()) {
        if (irreducible.count(word.letters())) continue;
        std::size_t p2 = 0, r2 = 0;
        if (!detail::find_redex(word, pres, p2, r2)) {
          irreducible.insert(word.letters());
          continue;
        }
        if (!target || pres.order.less(*target, word)) {
          target = &word;
          pos = p2;
          ri = r2;
        }
      }
    }
    if (!target) return e;
    if (fuel == 0)
      throw FuelExhausted("normalize: step cap exceeded in presentation " + pres.name);
    --fuel;

    const RewriteRule& rule = pres.rules[ri];
    const Word word = *target;
    const C coeff = *e.coeff(word);
    const Word head = word.subword(0, pos);
    const Word tail = word.subword(pos + rule.lhs.degree(),
                                   word.degree() - pos - rule.lhs.degree());
    e.add(word, -coeff);
    for (const auto& [rword, rcoeff] : rule.rhs.terms()) {
      Word produced = head.concat(rword).concat(tail);
      if (pres.oriented && !pres.order.less(produced, word))
        throw DescentViolation("normalize: non-decreasing step via rule " + rule.id);
      e.add(produced, coeff * rcoeff);
    }
  }
}

/// Decides equality modulo the presentation: normalize(e1 - e2) == 0.
inline bool equal(const Element& e1, const Element& e2, const Presentation& pres,
                  std::uint64_t fuel = kDefaultFuel) {
  return normalize(e1 - e2, pres, fuel).is_zero();
}

struct CriticalPair {
  Word overlap;
  std::string rule_a, rule_b;
  Element residual;  ///< normalized difference of the two one-step rewrites
};

/// All critical pairs with overlap degree <= degree_cap, residuals
/// normalized. An empty nonzero-residual set certifies local confluence up
/// to the cap.
std::vector<CriticalPair> critical_pairs(const Presentation& pres, int degree_cap = 5,
                                         std::uint64_t fuel = kDefaultFuel);

inline bool all_residuals_zero(const std::vector<CriticalPair>& pairs) {
  for (const auto& cp : pairs)
    if (!cp.residual.is_zero()) return false;
  return true;
}

/// One round of completion: every nonzero residual is oriented and added as
/// a rule. Throws when a residual cannot be oriented.
Presentation complete_once(const Presentation& pres, int degree_cap = 5,
                           std::uint64_t fuel = kDefaultFuel);

}  // namespace qcoact
