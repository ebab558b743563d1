#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoact/element.hpp"

namespace qcoact {

/// One oriented rewrite step: lhs -> rhs with lhs strictly greater than every
/// word of rhs under the presentation's term order.
struct RewriteRule {
  Word lhs;
  Element rhs;
  std::string id;
  bool from_star_closure = false;
};

/// A defining identity lhs = rhs, kept alongside the oriented rules for the
/// identity suite and the coaction homomorphism checks.
struct Relation {
  std::string id;
  Element lhs;
  Element rhs;
};

struct PresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generators, defining relations and an oriented rewrite system for one of
/// the sphere algebras (or a user-defined algebra from the DSL).
class Presentation {
 public:
  std::string name;
  std::vector<std::string> gen_names;
  /// Which of t (= sqrt q), u (= sqrt p), w may appear in coefficients.
  bool uses_q = false, uses_p = false, uses_w = false;
  TermOrder order;
  std::vector<RewriteRule> rules;
  std::vector<Relation> relations;
  /// Displayed identities that are consequences, not rules (e.g. the second
  /// sphere form); checked by the identity suite.
  std::vector<Relation> extra_identities;
  bool star_closed = false;
  /// All rules verified orientable; false only for deliberately broken
  /// test systems, which disables the per-step descent assertion.
  bool oriented = false;

  std::size_t gen_count() const { return gen_names.size(); }

  Element gen(std::uint8_t index, bool starred = false) const {
    if (index >= gen_count()) throw PresentationError("generator index out of range");
    return Element::gen(index, starred);
  }

  const RewriteRule* rule_with_lhs(const Word& w) const {
    for (const auto& r : rules)
      if (r.lhs == w) return &r;
    return nullptr;
  }

  /// Checks rule orientability, letter ranges and lhs uniqueness; sets the
  /// oriented flag. Throws on violation.
  void validate();
};

/// Orients lhs = rhs into a rewrite rule: the unique greatest word gets
/// solved for. Returns nullopt when no such orientation exists (greatest word
/// has a non-invertible coefficient, or the relation is trivial).
std::optional<RewriteRule> orient_relation(const Element& lhs, const Element& rhs,
                                           const TermOrder& order, const std::string& id);

/// Adds the oriented adjoint of every rule (self-adjoint relations are not
/// duplicated). Idempotent. Throws when an adjoint relation cannot be
/// oriented or conflicts with an existing rule.
Presentation star_closure(const Presentation& pres);

/// A(SU_q(2)): generators a, b. Literally the same rewrite system as
/// preset_vs(1) with p replaced by q.
Presentation preset_suq2();

/// Vaksman-Soibelman sphere A(S^{2m+1}_p): generators z0..zm.
Presentation preset_vs(int m);

/// Quaternionic 7-sphere O(S^7_q): generators x0..x3.
Presentation preset_bl();

/// preset_vs with the sphere rule deliberately solved for z0 z0^* instead of
/// zm zm^*. Not orientable and not confluent: exercises the critical-pair
/// audit's failure path.
Presentation preset_vs_misoriented(int m);

}  // namespace qcoact
