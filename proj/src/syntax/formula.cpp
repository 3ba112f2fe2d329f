#include "monotrick/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "monotrick/error.hpp"

namespace monotrick {

struct Formula::Node {
  Kind kind;
  std::string name;  // letter or bound variable
  std::vector<std::string> args;
  std::vector<Formula> children;
};

Formula::Formula() : Formula(verum()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string letter, std::vector<std::string> arguments) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::atom, std::move(letter), std::move(arguments), {}}));
}

Formula Formula::equality(std::string lhs, std::string rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::equality, {}, {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::verum() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::verum, {}, {}, {}}));
  return f;
}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::falsum, {}, {}, {}}));
  return f;
}

Formula Formula::negation(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, {}, {}, {std::move(body)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::conjunction, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::disjunction, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::implication, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::biconditional, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::box(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::box, {}, {}, {std::move(body)}}));
}

Formula Formula::diamond(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::diamond, {}, {}, {std::move(body)}}));
}

Formula Formula::forall(std::string variable, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::forall, std::move(variable), {}, {std::move(body)}}));
}

Formula Formula::exists(std::string variable, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::exists, std::move(variable), {}, {std::move(body)}}));
}

Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::letter() const { return node_->name; }
const std::vector<std::string>& Formula::arguments() const { return node_->args; }
const std::string& Formula::variable() const { return node_->name; }
const Formula& Formula::body() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }

bool Formula::is_binary() const noexcept {
  switch (node_->kind) {
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::implication:
    case Kind::biconditional:
      return true;
    default:
      return false;
  }
}

bool Formula::is_unary() const noexcept {
  switch (node_->kind) {
    case Kind::negation:
    case Kind::box:
    case Kind::diamond:
    case Kind::forall:
    case Kind::exists:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const noexcept {
  return node_->kind == Kind::forall || node_->kind == Kind::exists;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.args == y.args && x.children == y.children;
}

bool is_variable_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (std::string_view("xyzuvw").find(name.front()) == std::string_view::npos) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_keyword(std::string_view name) noexcept {
  return name == "forall" || name == "exists" || name == "true" || name == "false";
}

bool is_letter_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (unsigned char c : name) {
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  return !is_variable_name(name) && !is_keyword(name);
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::atom:
    case Kind::equality:
      for (const auto& v : f.arguments()) {
        if (!bound.contains(v)) out.insert(v);
      }
      return;
    case Kind::falsum:
    case Kind::verum:
      return;
    case Kind::forall:
    case Kind::exists: {
      const bool fresh = bound.insert(f.variable()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.variable());
      return;
    }
    default:
      if (f.is_binary()) {
        collect_free(f.lhs(), bound, out);
        collect_free(f.rhs(), bound, out);
      } else {
        collect_free(f.body(), bound, out);
      }
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::atom:
    case Kind::equality:
      out.insert(f.arguments().begin(), f.arguments().end());
      return;
    case Kind::falsum:
    case Kind::verum:
      return;
    case Kind::forall:
    case Kind::exists:
      out.insert(f.variable());
      collect_all(f.body(), out);
      return;
    default:
      if (f.is_binary()) {
        collect_all(f.lhs(), out);
        collect_all(f.rhs(), out);
      } else {
        collect_all(f.body(), out);
      }
  }
}

void collect_letters(const Formula& f, std::map<std::string, int>& out) {
  switch (f.kind()) {
    case Kind::atom: {
      const int arity = static_cast<int>(f.arguments().size());
      auto [it, inserted] = out.emplace(f.letter(), arity);
      if (!inserted && it->second != arity) {
        throw ArityError("letter " + f.letter() + " used with arities " +
                         std::to_string(it->second) + " and " + std::to_string(arity));
      }
      return;
    }
    case Kind::equality:
    case Kind::falsum:
    case Kind::verum:
      return;
    default:
      if (f.is_binary()) {
        collect_letters(f.lhs(), out);
        collect_letters(f.rhs(), out);
      } else {
        collect_letters(f.body(), out);
      }
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

std::map<std::string, int> letter_arities(const Formula& f) {
  std::map<std::string, int> out;
  collect_letters(f, out);
  return out;
}

std::size_t modal_depth(const Formula& f) {
  if (f.is_binary()) return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  if (f.is_unary()) {
    const std::size_t inner = modal_depth(f.body());
    return (f.kind() == Kind::box || f.kind() == Kind::diamond) ? inner + 1 : inner;
  }
  return 0;
}

std::size_t formula_size(const Formula& f) {
  if (f.is_binary()) return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
  if (f.is_unary()) return 1 + formula_size(f.body());
  return 1;
}

namespace {

void dump(const Formula& f, std::string& out) {
  auto join = [&out](const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ',';
      out += names[i];
    }
  };
  auto binary = [&](const char* tag) {
    out += tag;
    out += '(';
    dump(f.lhs(), out);
    out += ',';
    dump(f.rhs(), out);
    out += ')';
  };
  auto unary = [&](const char* tag) {
    out += tag;
    out += '(';
    dump(f.body(), out);
    out += ')';
  };
  switch (f.kind()) {
    case Kind::atom:
      out += "Atom(" + f.letter() + ",[";
      join(f.arguments());
      out += "])";
      return;
    case Kind::equality:
      out += "Equality(";
      join(f.arguments());
      out += ')';
      return;
    case Kind::falsum: out += "Falsum"; return;
    case Kind::verum: out += "Verum"; return;
    case Kind::negation: unary("Not"); return;
    case Kind::box: unary("Box"); return;
    case Kind::diamond: unary("Diamond"); return;
    case Kind::conjunction: binary("And"); return;
    case Kind::disjunction: binary("Or"); return;
    case Kind::implication: binary("Implies"); return;
    case Kind::biconditional: binary("Iff"); return;
    case Kind::forall:
    case Kind::exists:
      out += f.kind() == Kind::forall ? "Forall(" : "Exists(";
      out += f.variable();
      out += ',';
      dump(f.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_ast_string(const Formula& f) {
  std::string out;
  dump(f, out);
  return out;
}

}  // namespace monotrick
