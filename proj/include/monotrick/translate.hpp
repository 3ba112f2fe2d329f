#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monotrick/classical.hpp"
#include "monotrick/formula.hpp"
#include "monotrick/model.hpp"

namespace monotrick {

/// The replacement applied to every binary atom P(s,t):
///   diamond2      <>(Q1(s) & Q2(t))
///   neg_diamond1  ~<>(Q(s) & Q(t))          for symmetric irreflexive P
///   positive_imp  (Q1(s) & Q2(t) -> p) | q
///   neg_disj      ~(Q1(s) & Q2(t)) | q
enum class Variant { diamond2, neg_diamond1, positive_imp, neg_disj };

/// Short tags d2, nd1, pi, ndj.
std::string_view to_string(Variant v) noexcept;
/// Accepts the short tags and the long names (Diamond2, NegDiamond1,
/// PositiveImp, NegDisj).
std::optional<Variant> parse_variant(std::string_view text) noexcept;

/// Fresh letters introduced by a translation.
struct NamingScheme {
  std::string q1_name = "Q1";
  std::string q2_name = "Q2";
  std::string q_name = "Q";
  std::string p_name = "p_neg";
  std::string q_prop_name = "q_aux";

  /// The defaults, each suffixed with _1, _2, ... until it clashes with
  /// neither a letter of f nor another chosen name.
  static NamingScheme avoiding(const Formula& f);
};

/// Replaces every ~A by A -> fresh and every false by fresh. Throws
/// TranslationError when fresh is not a letter name or already occurs in f.
Formula positivize(const Formula& f, const std::string& fresh);

struct Translation {
  Formula formula;
  std::vector<std::string> warnings;
};

/// Applies the variant to every atom of the single binary letter. The input
/// must be modality-free, equality-free, and use no letters other than one
/// binary letter and propositional letters. Throws TranslationError (and
/// ArityError for inconsistent arities).
Translation kripke_trick(const Formula& f, Variant v, const NamingScheme& names);
Translation kripke_trick(const Formula& f, Variant v);

/// positivize with names.p_name followed by the trick, so the letter that
/// models negation is the p of positive_imp. Names are checked against f
/// before positivization.
Translation positive_trick(const Formula& f, Variant v, const NamingScheme& names);

struct CompanionModel {
  Model model;
  World root = 0;
};

/// The Kripke model in which the translated atoms at the root reproduce the
/// relation of s. Only diamond2 and neg_diamond1 have one.
///
/// diamond2: one world per pair (a,b) in the relation, where Q1 holds of a
/// and Q2 of b.
/// neg_diamond1: one world per unordered pair {a,b} (a = b allowed) outside
/// the relation, where Q holds of a and b.
///
/// In both cases the root carries no valuation, every world sees every
/// world, domains are constant and equality is identity.
CompanionModel build_companion_model(const ClassicalStructure& s, Variant v,
                                     const NamingScheme& names = {});

}  // namespace monotrick
