#include <string>

#include "monotrick/syntax.hpp"

namespace monotrick {

namespace {

// Binding strength in binary contexts. Equalities and atoms are primaries.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::biconditional: return 1;
    case Kind::implication: return 2;
    case Kind::disjunction: return 3;
    case Kind::conjunction: return 4;
    case Kind::negation:
    case Kind::box:
    case Kind::diamond:
    case Kind::forall:
    case Kind::exists:
      return 5;
    default:
      return 6;
  }
}

void print(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print_operand(const Formula& f, std::string& out) {
  print_wrapped(f, f.is_binary() || f.kind() == Kind::equality, out);
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::atom: {
      out += f.letter();
      const auto& args = f.arguments();
      if (!args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (i) out += ',';
          out += args[i];
        }
        out += ')';
      }
      return;
    }
    case Kind::equality:
      out += f.arguments()[0];
      out += " = ";
      out += f.arguments()[1];
      return;
    case Kind::falsum: out += "false"; return;
    case Kind::verum: out += "true"; return;
    case Kind::negation:
      out += '~';
      print_operand(f.body(), out);
      return;
    case Kind::box:
      out += "[]";
      print_operand(f.body(), out);
      return;
    case Kind::diamond:
      out += "<>";
      print_operand(f.body(), out);
      return;
    case Kind::forall:
    case Kind::exists:
      out += f.kind() == Kind::forall ? "forall " : "exists ";
      out += f.variable();
      out += ' ';
      print_operand(f.body(), out);
      return;
    default:
      break;
  }

  const int p = precedence(f);
  const char* op = nullptr;
  bool right_assoc = false;
  switch (f.kind()) {
    case Kind::conjunction: op = " & "; break;
    case Kind::disjunction: op = " | "; break;
    case Kind::implication: op = " -> "; right_assoc = true; break;
    default: op = " <-> "; right_assoc = true; break;
  }
  const int lp = precedence(f.lhs());
  const int rp = precedence(f.rhs());
  print_wrapped(f.lhs(), right_assoc ? lp <= p : lp < p, out);
  out += op;
  print_wrapped(f.rhs(), right_assoc ? rp < p : rp <= p, out);
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace monotrick
