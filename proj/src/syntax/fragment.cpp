#include <algorithm>

#include "monotrick/syntax.hpp"

namespace monotrick {

namespace {

void scan(const Formula& f, FragmentReport& r) {
  switch (f.kind()) {
    case Kind::atom:
      r.max_letter_arity = std::max(r.max_letter_arity, static_cast<int>(f.arguments().size()));
      return;
    case Kind::equality:
      r.has_equality = true;
      return;
    case Kind::falsum:
      r.is_positive = false;
      return;
    case Kind::verum:
      return;
    case Kind::negation:
      r.is_positive = false;
      scan(f.body(), r);
      return;
    case Kind::box:
    case Kind::diamond:
      if (free_variables(f.body()).size() > 1) r.is_monodic = false;
      scan(f.body(), r);
      return;
    default:
      if (f.is_binary()) {
        scan(f.lhs(), r);
        scan(f.rhs(), r);
      } else {
        scan(f.body(), r);
      }
  }
}

}  // namespace

FragmentReport classify(const Formula& f) {
  FragmentReport r;
  scan(f, r);
  r.is_monadic = r.max_letter_arity <= 1;
  r.variable_count = all_variables(f).size();
  r.modal_depth = modal_depth(f);
  return r;
}

}  // namespace monotrick
