#include "qcoact/presentation.hpp"

#include <set>

namespace qcoact {

void Presentation::validate() {
  std::set<std::vector<Letter>> seen;
  for (const auto& rule : rules) {
    if (rule.lhs.empty()) throw PresentationError(name + ": rule with empty lhs");
    for (const auto& l : rule.lhs.letters())
      if (l.index >= gen_count())
        throw PresentationError(name + ": rule letter out of generator range");
    if (!seen.insert(rule.lhs.letters()).second)
      throw PresentationError(name + ": duplicate rule lhs " + rule.lhs.str(gen_names));
    for (const auto& [word, coeff] : rule.rhs.terms()) {
      for (const auto& l : word.letters())
        if (l.index >= gen_count())
          throw PresentationError(name + ": rhs letter out of generator range");
      if (!order.less(word, rule.lhs))
        throw PresentationError(name + ": rule " + rule.id + " not orientable: rhs word " +
                                word.str(gen_names) + " not below lhs " +
                                rule.lhs.str(gen_names));
    }
  }
  oriented = true;
}

std::optional<RewriteRule> orient_relation(const Element& lhs, const Element& rhs,
                                           const TermOrder& order, const std::string& id) {
  Element diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const Word* greatest = nullptr;
  const Scalar* coeff = nullptr;
  for (const auto& [word, c] : diff.terms()) {
    if (!greatest || order.less(*greatest, word)) {
      greatest = &word;
      coeff = &c;
    }
  }
  auto inv = coeff->inverse();
  if (!inv) return std::nullopt;
  Element rest = Element(*greatest, *coeff) - diff;  // = coeff*g - (lhs - rhs)
  RewriteRule rule{*greatest, rest.scaled(*inv), id, false};
  for (const auto& [word, c] : rule.rhs.terms())
    if (!order.less(word, rule.lhs)) return std::nullopt;
  return rule;
}

Presentation star_closure(const Presentation& pres) {
  Presentation out = pres;
  for (const auto& rule : pres.rules) {
    Element lhs_adj = Element(rule.lhs).adjoint();
    Element rhs_adj = rule.rhs.adjoint();
    auto adj = orient_relation(lhs_adj, rhs_adj, out.order, rule.id + "*");
    if (!adj)
      throw PresentationError(pres.name + ": adjoint of rule " + rule.id +
                              " is not orientable");
    if (const RewriteRule* existing = out.rule_with_lhs(adj->lhs)) {
      if (existing->rhs != adj->rhs)
        throw PresentationError(pres.name + ": adjoint of rule " + rule.id +
                                " conflicts with rule " + existing->id);
      continue;  // self-adjoint or already closed
    }
    adj->from_star_closure = true;
    out.rules.push_back(std::move(*adj));
  }
  out.star_closed = true;
  out.validate();
  return out;
}

namespace {

Element word2(std::uint8_t i, bool si, std::uint8_t j, bool sj, Scalar c = Scalar::one()) {
  return Element(Word({Letter{i, si}, Letter{j, sj}}), c);
}

/// Shared construction for the VS family; `param` picks the deformation
/// letter (u for VS, t for SU_q(2) so that preset_vs(1) and preset_suq2 are
/// the same system up to the parameter name).
Presentation build_vs_like(const std::string& name, std::vector<std::string> gen_names,
                           const Scalar& par) {
  Presentation pr;
  pr.name = name;
  pr.gen_names = std::move(gen_names);
  const int m = static_cast<int>(pr.gen_count()) - 1;
  const Scalar par2 = par * par;
  const Scalar one = Scalar::one();

  auto zi = [](int i, bool star = false) { return Element::gen(std::uint8_t(i), star); };

  // z_j z_i = p z_i z_j for i < j
  for (int i = 0; i < m + 1; ++i)
    for (int j = i + 1; j < m + 1; ++j)
      pr.relations.push_back({"plain[" + std::to_string(j) + "," + std::to_string(i) + "]",
                              word2(j, false, i, false), word2(i, false, j, false, par)});
  // z_i^* z_j = p z_j z_i^* for i != j
  for (int i = 0; i < m + 1; ++i)
    for (int j = 0; j < m + 1; ++j) {
      if (i == j) continue;
      pr.relations.push_back({"mixed[" + std::to_string(i) + "," + std::to_string(j) + "]",
                              word2(i, true, j, false), word2(j, false, i, true, par)});
    }
  // z_i^* z_i = z_i z_i^* + (1 - p^2) sum_{j>i} z_j z_j^*
  for (int i = 0; i < m + 1; ++i) {
    Element rhs = word2(i, false, i, true);
    for (int j = i + 1; j < m + 1; ++j) rhs += word2(j, false, j, true, one - par2);
    pr.relations.push_back({"diag[" + std::to_string(i) + "]", word2(i, true, i, false), rhs});
  }
  // sphere: sum_i z_i z_i^* = 1
  Element sphere_lhs;
  for (int i = 0; i < m + 1; ++i) sphere_lhs += word2(i, false, i, true);
  pr.relations.push_back({"sphere", sphere_lhs, Element::unit()});

  for (const auto& rel : pr.relations) {
    auto rule = orient_relation(rel.lhs, rel.rhs, pr.order, rel.id);
    if (!rule) throw PresentationError(name + ": relation " + rel.id + " not orientable");
    pr.rules.push_back(std::move(*rule));
  }
  return star_closure(pr);
}

}  // namespace

Presentation preset_vs(int m) {
  if (m < 1) throw PresentationError("preset_vs: m must be at least 1");
  std::vector<std::string> names;
  for (int i = 0; i <= m; ++i) names.push_back("z" + std::to_string(i));
  Presentation pr = build_vs_like("vs" + std::to_string(2 * m + 1), std::move(names),
                                  Scalar::u());
  pr.uses_p = true;
  return pr;
}

Presentation preset_suq2() {
  Presentation pr = build_vs_like("suq2", {"a", "b"}, Scalar::t());
  pr.uses_q = true;
  // The displayed relation set of A(SU_q(2)); the rewrite system above
  // already encodes them (the a^*a rule is the derived combination of the
  // two sphere-type relations).
  pr.relations.clear();
  auto a = Element::gen(0), b = Element::gen(1);
  auto as = Element::gen(0, true), bs = Element::gen(1, true);
  const Scalar q = Scalar::q();
  pr.relations.push_back({"ba", b * a, a * b.scaled(q)});
  pr.relations.push_back({"b*a", bs * a, (a * bs).scaled(q)});
  pr.relations.push_back({"bb*", b * bs, bs * b});
  pr.relations.push_back({"a*a+q2b*b", as * a + (bs * b).scaled(q * q), Element::unit()});
  pr.relations.push_back({"aa*+bb*", a * as + b * bs, Element::unit()});
  return pr;
}

Presentation preset_bl() {
  Presentation pr;
  pr.name = "bl7";
  pr.gen_names = {"x0", "x1", "x2", "x3"};
  pr.uses_q = true;

  const Scalar q = Scalar::q(), qi = Scalar::q(-1);
  const Scalar qh = Scalar::t(), qhi = Scalar::t(-1);  // q^{1/2}, q^{-1/2}
  const Scalar one = Scalar::one();
  const Scalar one_m_q2 = one - q * q;

  auto rel = [&pr](std::string id, Element lhs, Element rhs) {
    pr.relations.push_back({std::move(id), std::move(lhs), std::move(rhs)});
  };

  // Pair-internal relations, pairs (0,1) and (2,3).
  for (int base : {0, 2}) {
    int s0 = base, s1 = base + 1;
    std::string tag = std::to_string(s1) + std::to_string(s0);
    rel("pair[" + tag + "]", word2(s1, false, s0, false), word2(s0, false, s1, false, qi));
    rel("pair*[" + tag + "]", word2(s1, true, s0, false), word2(s0, false, s1, true, q));
    rel("diag[" + std::to_string(s0) + "]", word2(s0, true, s0, false),
        word2(s0, false, s0, true));
    rel("diag[" + std::to_string(s1) + "]", word2(s1, true, s1, false),
        word2(s1, false, s1, true) + word2(s0, false, s0, true, one_m_q2));
  }
  // Braided relations between the pairs.
  rel("braid[20]", word2(2, false, 0, false), word2(0, false, 2, false, qh));
  rel("braid[30]", word2(3, false, 0, false), word2(0, false, 3, false, qhi));
  rel("braid[21]", word2(2, false, 1, false), word2(1, false, 2, false, qh));
  rel("braid[31]", word2(3, false, 1, false), word2(1, false, 3, false, qhi));
  rel("braid*[20]", word2(2, true, 0, false), word2(0, false, 2, true, qh));
  rel("braid*[30]", word2(3, true, 0, false),
      word2(0, false, 3, true, qhi) - word2(2, false, 1, true, qi * one_m_q2));
  rel("braid*[21]", word2(2, true, 1, false), word2(1, false, 2, true, qh));
  rel("braid*[31]", word2(3, true, 1, false),
      word2(1, false, 3, true, qhi) + word2(2, false, 0, true, one_m_q2));
  // Sphere relation, first displayed form; the second form is an identity.
  Element sphere;
  for (int i = 0; i < 4; ++i) sphere += word2(i, false, i, true);
  rel("sphere", sphere, Element::unit());

  Element sphere2 = word2(0, true, 0, false, q * q) + word2(1, true, 1, false) +
                    word2(2, true, 2, false, q * q) + word2(3, true, 3, false);
  pr.extra_identities.push_back({"sphere-form-2", sphere2, Element::unit()});

  for (const auto& r : pr.relations) {
    auto rule = orient_relation(r.lhs, r.rhs, pr.order, r.id);
    if (!rule) throw PresentationError("bl7: relation " + r.id + " not orientable");
    pr.rules.push_back(std::move(*rule));
  }
  return star_closure(pr);
}

Presentation preset_vs_misoriented(int m) {
  Presentation pr = preset_vs(m);
  pr.name += "-misoriented";
  for (auto& rule : pr.rules) {
    if (rule.id != "sphere") continue;
    // Solve the sphere relation for z0 z0^* instead; greater words appear on
    // the right, so the descent assertion must stay off.
    Element rhs = Element::unit();
    for (int j = 1; j <= m; ++j) rhs -= word2(std::uint8_t(j), false, std::uint8_t(j), true);
    rule.lhs = Word({Letter{0, false}, Letter{0, true}});
    rule.rhs = rhs;
  }
  pr.oriented = false;
  return pr;
}

}  // namespace qcoact
