#include "monotrick/translate.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "monotrick/error.hpp"
#include "monotrick/syntax.hpp"

namespace monotrick {

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::diamond2: return "d2";
    case Variant::neg_diamond1: return "nd1";
    case Variant::positive_imp: return "pi";
    case Variant::neg_disj: return "ndj";
  }
  return "d2";
}

std::optional<Variant> parse_variant(std::string_view text) noexcept {
  if (text == "d2" || text == "Diamond2") return Variant::diamond2;
  if (text == "nd1" || text == "NegDiamond1") return Variant::neg_diamond1;
  if (text == "pi" || text == "PositiveImp") return Variant::positive_imp;
  if (text == "ndj" || text == "NegDisj") return Variant::neg_disj;
  return std::nullopt;
}

NamingScheme NamingScheme::avoiding(const Formula& f) {
  std::set<std::string> taken;
  for (const auto& [letter, arity] : letter_arities(f)) taken.insert(letter);
  NamingScheme s;
  for (std::string* name : {&s.q1_name, &s.q2_name, &s.q_name, &s.p_name, &s.q_prop_name}) {
    const std::string base = *name;
    for (int n = 1; taken.contains(*name); ++n) *name = base + "_" + std::to_string(n);
    taken.insert(*name);
  }
  return s;
}

namespace {

Formula positivize_rec(const Formula& f, const Formula& fresh) {
  switch (f.kind()) {
    case Kind::falsum:
      return fresh;
    case Kind::atom:
    case Kind::equality:
    case Kind::verum:
      return f;
    case Kind::negation:
      return Formula::implication(positivize_rec(f.body(), fresh), fresh);
    case Kind::conjunction:
      return Formula::conjunction(positivize_rec(f.lhs(), fresh), positivize_rec(f.rhs(), fresh));
    case Kind::disjunction:
      return Formula::disjunction(positivize_rec(f.lhs(), fresh), positivize_rec(f.rhs(), fresh));
    case Kind::implication:
      return Formula::implication(positivize_rec(f.lhs(), fresh), positivize_rec(f.rhs(), fresh));
    case Kind::biconditional:
      return Formula::biconditional(positivize_rec(f.lhs(), fresh),
                                    positivize_rec(f.rhs(), fresh));
    case Kind::box:
      return Formula::box(positivize_rec(f.body(), fresh));
    case Kind::diamond:
      return Formula::diamond(positivize_rec(f.body(), fresh));
    case Kind::forall:
      return Formula::forall(f.variable(), positivize_rec(f.body(), fresh));
    case Kind::exists:
      return Formula::exists(f.variable(), positivize_rec(f.body(), fresh));
  }
  return f;
}

struct Replacement {
  std::string letter;
  Variant variant;
  const NamingScheme* names;

  Formula operator()(const std::string& s, const std::string& t) const {
    switch (variant) {
      case Variant::diamond2:
        return Formula::diamond(Formula::conjunction(Formula::atom(names->q1_name, {s}),
                                                     Formula::atom(names->q2_name, {t})));
      case Variant::neg_diamond1:
        return Formula::negation(Formula::diamond(Formula::conjunction(
            Formula::atom(names->q_name, {s}), Formula::atom(names->q_name, {t}))));
      case Variant::positive_imp:
        return Formula::disjunction(
            Formula::implication(Formula::conjunction(Formula::atom(names->q1_name, {s}),
                                                      Formula::atom(names->q2_name, {t})),
                                 Formula::atom(names->p_name)),
            Formula::atom(names->q_prop_name));
      case Variant::neg_disj:
        return Formula::disjunction(
            Formula::negation(Formula::conjunction(Formula::atom(names->q1_name, {s}),
                                                   Formula::atom(names->q2_name, {t}))),
            Formula::atom(names->q_prop_name));
    }
    return Formula::verum();
  }
};

Formula replace(const Formula& f, const Replacement& r) {
  switch (f.kind()) {
    case Kind::atom:
      if (f.letter() == r.letter && f.arguments().size() == 2) {
        return r(f.arguments()[0], f.arguments()[1]);
      }
      return f;
    case Kind::equality:
    case Kind::falsum:
    case Kind::verum:
      return f;
    case Kind::negation: return Formula::negation(replace(f.body(), r));
    case Kind::box: return Formula::box(replace(f.body(), r));
    case Kind::diamond: return Formula::diamond(replace(f.body(), r));
    case Kind::forall: return Formula::forall(f.variable(), replace(f.body(), r));
    case Kind::exists: return Formula::exists(f.variable(), replace(f.body(), r));
    case Kind::conjunction: return Formula::conjunction(replace(f.lhs(), r), replace(f.rhs(), r));
    case Kind::disjunction: return Formula::disjunction(replace(f.lhs(), r), replace(f.rhs(), r));
    case Kind::implication: return Formula::implication(replace(f.lhs(), r), replace(f.rhs(), r));
    case Kind::biconditional:
      return Formula::biconditional(replace(f.lhs(), r), replace(f.rhs(), r));
  }
  return f;
}

std::vector<const std::string*> names_used(Variant v, const NamingScheme& n) {
  switch (v) {
    case Variant::diamond2: return {&n.q1_name, &n.q2_name};
    case Variant::neg_diamond1: return {&n.q_name};
    case Variant::positive_imp: return {&n.q1_name, &n.q2_name, &n.p_name, &n.q_prop_name};
    case Variant::neg_disj: return {&n.q1_name, &n.q2_name, &n.q_prop_name};
  }
  return {};
}

// Returns the binary letter, empty when f has none.
std::string check_input(const Formula& f, Variant v, const NamingScheme& names) {
  if (modal_depth(f) > 0) throw TranslationError("input contains a modality");
  const FragmentReport report = classify(f);
  if (report.has_equality) throw TranslationError("input contains an equality atom");

  const auto letters = letter_arities(f);
  std::string binary;
  for (const auto& [letter, arity] : letters) {
    if (arity == 0) continue;
    if (arity == 1) {
      throw TranslationError("unary letter " + letter +
                             " is not allowed; only one binary letter and propositional letters");
    }
    if (arity > 2) {
      throw TranslationError("letter " + letter + " has arity " + std::to_string(arity) +
                             "; only one binary letter is allowed");
    }
    if (!binary.empty()) {
      throw TranslationError("second binary letter " + letter + " (already using " + binary + ")");
    }
    binary = letter;
  }

  const auto used = names_used(v, names);
  std::set<std::string> seen;
  for (const std::string* name : used) {
    if (!is_letter_name(*name)) throw TranslationError("'" + *name + "' is not a letter name");
    if (!seen.insert(*name).second) {
      throw TranslationError("naming collision: " + *name + " is used for two roles");
    }
    if (letters.contains(*name)) {
      throw TranslationError("naming collision: " + *name + " already occurs in the input");
    }
  }
  return binary;
}

}  // namespace

Formula positivize(const Formula& f, const std::string& fresh) {
  if (!is_letter_name(fresh)) throw TranslationError("'" + fresh + "' is not a letter name");
  if (letter_arities(f).contains(fresh)) {
    throw TranslationError("naming collision: " + fresh + " already occurs in the input");
  }
  return positivize_rec(f, Formula::atom(fresh));
}

Translation kripke_trick(const Formula& f, Variant v, const NamingScheme& names) {
  const std::string binary = check_input(f, v, names);
  Translation out{f, {}};
  if ((v == Variant::positive_imp || v == Variant::neg_disj) && !classify(f).is_positive) {
    out.warnings.push_back("input is not positive; apply positivize first");
  }
  if (!binary.empty()) out.formula = replace(f, Replacement{binary, v, &names});
  return out;
}

Translation kripke_trick(const Formula& f, Variant v) {
  return kripke_trick(f, v, NamingScheme::avoiding(f));
}

Translation positive_trick(const Formula& f, Variant v, const NamingScheme& names) {
  const std::string binary = check_input(f, v, names);
  if (letter_arities(f).contains(names.p_name)) {
    throw TranslationError("naming collision: " + names.p_name + " already occurs in the input");
  }
  const Formula positive = positivize(f, names.p_name);
  Translation out{positive, {}};
  if (!binary.empty()) out.formula = replace(positive, Replacement{binary, v, &names});
  return out;
}

CompanionModel build_companion_model(const ClassicalStructure& s, Variant v,
                                     const NamingScheme& names) {
  if (v != Variant::diamond2 && v != Variant::neg_diamond1) {
    throw TranslationError("variant " + std::string(to_string(v)) + " has no companion model");
  }
  if (s.size == 0) throw TranslationError("classical structure has an empty domain");
  for (auto [a, b] : s.relation) {
    if (a >= s.size || b >= s.size) throw TranslationError("relation leaves the domain");
  }
  if (v == Variant::neg_diamond1 && !(s.symmetric() && s.irreflexive())) {
    throw TranslationError("the neg_diamond1 companion needs a symmetric irreflexive relation");
  }

  // Worlds after the root, each labelled by the pair it witnesses.
  std::vector<std::pair<Individual, Individual>> pairs;
  if (v == Variant::diamond2) {
    pairs.assign(s.relation.begin(), s.relation.end());
  } else {
    for (Individual a = 0; a < s.size; ++a) {
      for (Individual b = a; b < s.size; ++b) {
        if (!s.relation.contains({a, b})) pairs.emplace_back(a, b);
      }
    }
  }

  std::vector<std::string> worlds{"root"};
  for (auto [a, b] : pairs) worlds.push_back("w" + std::to_string(a) + "_" + std::to_string(b));
  std::vector<std::string> individuals;
  for (std::size_t a = 0; a < s.size; ++a) individuals.push_back(std::to_string(a));

  Frame frame(std::move(worlds));
  for (World w = 0; w < frame.size(); ++w) {
    for (World u = 0; u < frame.size(); ++u) frame.connect(w, u);
  }
  Model m = make_model(std::move(frame), std::move(individuals), Mode::modal, EqPrinciple::eq3,
                       true);
  for (World w = 0; w < m.frame.size(); ++w) m.domains.assign_prefix(w, s.size);
  m.equality.reset_identity(m.domains);

  if (v == Variant::diamond2) {
    const std::size_t q1 = m.valuation.declare(names.q1_name, 1);
    const std::size_t q2 = m.valuation.declare(names.q2_name, 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto w = static_cast<World>(i + 1);
      const std::array<Individual, 1> a{pairs[i].first};
      const std::array<Individual, 1> b{pairs[i].second};
      m.valuation.set(w, q1, a);
      m.valuation.set(w, q2, b);
    }
  } else {
    const std::size_t q = m.valuation.declare(names.q_name, 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto w = static_cast<World>(i + 1);
      const std::array<Individual, 1> a{pairs[i].first};
      const std::array<Individual, 1> b{pairs[i].second};
      m.valuation.set(w, q, a);
      m.valuation.set(w, q, b);
    }
  }
  return {std::move(m), 0};
}

}  // namespace monotrick
