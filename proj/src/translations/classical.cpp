#include "monotrick/classical.hpp"

#include "monotrick/error.hpp"

namespace monotrick {

bool ClassicalStructure::symmetric() const {
  for (auto [a, b] : relation) {
    if (!relation.contains({b, a})) return false;
  }
  return true;
}

bool ClassicalStructure::irreflexive() const {
  for (auto [a, b] : relation) {
    if (a == b) return false;
  }
  return true;
}

std::string describe(const ClassicalStructure& s) {
  std::string out = "size " + std::to_string(s.size) + ", " + s.binary_letter + " = {";
  bool first = true;
  for (auto [a, b] : s.relation) {
    if (!first) out += ',';
    first = false;
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  out += "}";
  for (const auto& [letter, ext] : s.unary) {
    out += ", " + letter + " = {";
    bool f = true;
    for (Individual a : ext) {
      if (!f) out += ',';
      f = false;
      out += std::to_string(a);
    }
    out += "}";
  }
  for (const auto& [letter, value] : s.propositions) {
    out += ", " + letter + " = " + (value ? "true" : "false");
  }
  return out;
}

namespace {

class Tarski {
 public:
  explicit Tarski(const ClassicalStructure& s) : s_(s) {}

  bool holds(const Formula& f, Assignment& sigma) const {
    switch (f.kind()) {
      case Kind::verum: return true;
      case Kind::falsum: return false;
      case Kind::atom: return atom(f, sigma);
      case Kind::equality: return value(f.arguments()[0], sigma) == value(f.arguments()[1], sigma);
      case Kind::negation: return !holds(f.body(), sigma);
      case Kind::conjunction: return holds(f.lhs(), sigma) && holds(f.rhs(), sigma);
      case Kind::disjunction: return holds(f.lhs(), sigma) || holds(f.rhs(), sigma);
      case Kind::implication: return !holds(f.lhs(), sigma) || holds(f.rhs(), sigma);
      case Kind::biconditional: return holds(f.lhs(), sigma) == holds(f.rhs(), sigma);
      case Kind::box:
      case Kind::diamond:
        throw EvalError("classical evaluation does not accept modal operators");
      case Kind::forall:
      case Kind::exists: {
        const bool universal = f.kind() == Kind::forall;
        auto saved = sigma.find(f.variable());
        const bool had = saved != sigma.end();
        const Individual old = had ? saved->second : 0;
        bool result = universal;
        for (Individual a = 0; a < s_.size; ++a) {
          sigma[f.variable()] = a;
          if (holds(f.body(), sigma) != universal) {
            result = !universal;
            break;
          }
        }
        if (had) {
          sigma[f.variable()] = old;
        } else {
          sigma.erase(f.variable());
        }
        return result;
      }
    }
    return false;
  }

 private:
  Individual value(const std::string& var, const Assignment& sigma) const {
    auto it = sigma.find(var);
    if (it == sigma.end()) throw EvalError("free variable " + var + " is not assigned");
    if (it->second >= s_.size) throw EvalError("individual out of range for " + var);
    return it->second;
  }

  bool atom(const Formula& f, const Assignment& sigma) const {
    const auto& args = f.arguments();
    switch (args.size()) {
      case 0: {
        auto it = s_.propositions.find(f.letter());
        return it != s_.propositions.end() && it->second;
      }
      case 1: {
        auto it = s_.unary.find(f.letter());
        return it != s_.unary.end() && it->second.contains(value(args[0], sigma));
      }
      case 2:
        return f.letter() == s_.binary_letter &&
               s_.relation.contains({value(args[0], sigma), value(args[1], sigma)});
      default:
        throw EvalError("classical structures carry no letters of arity above two");
    }
  }

  const ClassicalStructure& s_;
};

}  // namespace

bool classical_holds(const ClassicalStructure& s, const Formula& f, const Assignment& sigma) {
  Assignment local = sigma;
  return Tarski(s).holds(f, local);
}

}  // namespace monotrick
