#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monotrick/formula.hpp"
#include "monotrick/model.hpp"

namespace oracle {

using monotrick::Formula;
using monotrick::Individual;
using monotrick::Model;
using monotrick::World;
using Sigma = std::map<std::string, Individual>;

/// Direct transcription of the truth clauses over the syntax tree.
bool naive_eval(const Model& m, World w, const Sigma& sigma, const Formula& f);

/// Tarskian truth over {0..n-1}; letters missing from the maps are empty.
struct Structure {
  std::size_t size = 1;
  std::set<std::pair<Individual, Individual>> binary;  // the letter P
  std::map<std::string, std::set<Individual>> unary;
  std::map<std::string, bool> props;
};
bool naive_classical(const Structure& s, const Sigma& sigma, const Formula& f);

struct Letter {
  std::string name;
  int arity;
};

struct FormulaShape {
  std::vector<Letter> letters;
  std::vector<std::string> variables = {"x", "y"};
  bool modal = true;
  bool equality = true;
  bool negation = true;  // ~ and false
  bool quantifiers = true;
};

class FormulaGen {
 public:
  FormulaGen(FormulaShape shape, std::uint64_t seed) : shape_(std::move(shape)), rng_(seed) {}
  Formula operator()(int depth);
  std::mt19937_64& rng() { return rng_; }

 private:
  Formula atomic();
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  FormulaShape shape_;
  std::mt19937_64 rng_;
};

struct ModelShape {
  std::size_t worlds = 2;
  std::size_t pool = 2;
  monotrick::Mode mode = monotrick::Mode::modal;
  monotrick::EqPrinciple principle = monotrick::EqPrinciple::eq3;
  bool constant = false;
  std::vector<Letter> letters;
  double edge_probability = 0.4;
  double truth_probability = 0.4;
  double merge_probability = 0.2;
};

/// A random model satisfying every invariant of its principle and mode.
Model random_model(const ModelShape& shape, std::mt19937_64& rng);

/// Every assignment of vars into D(w), last variable fastest.
std::vector<Sigma> assignments(const Model& m, World w, const std::vector<std::string>& vars);

}  // namespace oracle
