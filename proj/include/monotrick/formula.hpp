#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace monotrick {

enum class Kind {
  atom,
  equality,
  falsum,
  verum,
  negation,
  conjunction,
  disjunction,
  implication,
  biconditional,
  box,
  diamond,
  forall,
  exists,
};

/// Immutable first-order modal formula. Copies share structure, so values are
/// cheap to pass around and safe to read from several threads.
class Formula {
 public:
  /// Verum.
  Formula();

  static Formula atom(std::string letter, std::vector<std::string> arguments = {});
  static Formula equality(std::string lhs, std::string rhs);
  static Formula verum();
  static Formula falsum();
  static Formula negation(Formula body);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula box(Formula body);
  static Formula diamond(Formula body);
  static Formula forall(std::string variable, Formula body);
  static Formula exists(std::string variable, Formula body);

  Kind kind() const noexcept;

  /// Predicate letter of an atom.
  const std::string& letter() const;
  /// Argument variables of an atom, or the two sides of an equality.
  const std::vector<std::string>& arguments() const;
  /// Variable bound by a quantifier.
  const std::string& variable() const;
  /// Operand of a unary connective, modality or quantifier.
  const Formula& body() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_binary() const noexcept;
  /// Negation, box, diamond and the quantifiers.
  bool is_unary() const noexcept;
  bool is_quantifier() const noexcept;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

/// Variables are x, y, z, u, v, w optionally followed by digits.
bool is_variable_name(std::string_view name) noexcept;
bool is_keyword(std::string_view name) noexcept;
/// Any identifier that is neither a variable nor a keyword.
bool is_letter_name(std::string_view name) noexcept;

std::set<std::string> free_variables(const Formula& f);
/// Every variable occurring in f, free, bound or as a binder.
std::set<std::string> all_variables(const Formula& f);

/// Letter -> arity. Throws ArityError when a letter has two arities.
std::map<std::string, int> letter_arities(const Formula& f);

std::size_t modal_depth(const Formula& f);
std::size_t formula_size(const Formula& f);

/// Constructor-style dump, e.g. `Diamond(And(Atom(Q1,[x]),Atom(Q2,[y])))`.
std::string to_ast_string(const Formula& f);

}  // namespace monotrick
