#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "monotrick/eval.hpp"
#include "monotrick/formula.hpp"

namespace monotrick {

/// A finite first-order structure over the domain {0, ..., size-1}: one
/// binary relation plus, for bounded satisfiability search, optional unary
/// and propositional letters. Letters not listed are empty (false).
struct ClassicalStructure {
  std::size_t size = 1;
  std::string binary_letter = "P";
  std::set<std::pair<Individual, Individual>> relation;
  std::map<std::string, std::set<Individual>> unary;
  std::map<std::string, bool> propositions;

  bool symmetric() const;
  bool irreflexive() const;

  friend bool operator==(const ClassicalStructure&, const ClassicalStructure&) = default;
};

/// e.g. `size 2, P = {(0,1)}`.
std::string describe(const ClassicalStructure& s);

/// Tarskian truth with equality read as identity. Throws EvalError on
/// modalities, unassigned free variables, out-of-range individuals and
/// letters of arity above two.
bool classical_holds(const ClassicalStructure& s, const Formula& f, const Assignment& sigma = {});

}  // namespace monotrick
