#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotrick/formula.hpp"
#include "monotrick/model.hpp"

namespace monotrick {

using Assignment = std::map<std::string, Individual>;

/// A formula compiled against one model layout.
///
/// Letters and variables are resolved once, so repeated evaluation does no
/// name lookups. The model must outlive the evaluator. Its valuation and
/// equality tables may be rewritten between calls as long as the set of
/// worlds, the individual pool and the letter table stay the same.
///
/// Modal mode: Boolean connectives are classical, [] and <> quantify over
/// successors, and quantifiers range over the current world's domain.
/// Intuitionistic mode: ->, ~ and <-> look at every successor (the frame is
/// a preorder, so that includes the world itself), forall ranges over every
/// successor's domain, and the remaining clauses are local.
class Evaluator {
 public:
  /// Throws EvalError for modalities in intuitionistic mode and for letters
  /// whose arity disagrees with the model.
  Evaluator(const Model& model, const Formula& formula);

  /// Sorted by name.
  const std::vector<std::string>& free_variables() const noexcept { return free_; }

  /// `values[i]` is the value of `free_variables()[i]`. Not range-checked.
  bool holds(World w, std::span<const Individual> values) const;

  /// Checked variant. Throws EvalError for an unknown world, an unassigned
  /// free variable or an individual outside D(w).
  bool holds(World w, const Assignment& sigma) const;

 private:
  struct Op {
    Kind kind;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    std::uint32_t letter = 0;
    std::uint32_t args_begin = 0;
    std::uint32_t arity = 0;
    std::uint32_t slot = 0;
    bool letter_known = false;
  };

  std::uint32_t compile(const Formula& f);
  bool modal(std::uint32_t op, World w, Individual* slots) const;
  bool intuitionistic(std::uint32_t op, World w, Individual* slots) const;
  bool run(World w, Individual* slots) const;

  const Model* model_;
  std::vector<Op> ops_;
  std::vector<std::uint32_t> args_;
  std::vector<std::size_t> scale_;
  std::vector<std::string> slots_;
  std::vector<std::string> free_;
  std::vector<std::uint32_t> free_slot_;
  std::uint32_t root_ = 0;
};

/// Truth of f at w under sigma.
bool eval(const Model& m, World w, const Assignment& sigma, const Formula& f);

struct Falsifier {
  World world;
  Assignment assignment;
};

struct ModelCheck {
  bool valid = true;
  std::optional<Falsifier> witness;
};

/// Universal-closure reading: f must hold at every world under every
/// assignment of its free variables into that world's domain. The witness is
/// the first failure with worlds ascending and assignments in lexicographic
/// order of (sorted variables, ascending individuals).
ModelCheck valid_in_model(const Model& m, const Formula& f);

}  // namespace monotrick
