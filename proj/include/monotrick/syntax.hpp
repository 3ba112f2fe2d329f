#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "monotrick/formula.hpp"

namespace monotrick {

/// Parses the ASCII formula grammar:
///
///   ~ not   & and   | or   -> implies   <-> iff   [] box   <> diamond
///   forall x F   exists x F   true   false   x = y   P(x,y)   p
///
/// Unary operators bind tightest, then &, |, -> (right associative) and <->
/// (right associative). `#` starts a comment that runs to end of line.
/// Throws ParseError or ArityError.
Formula parse(std::string_view text);

/// Prints with the fewest parentheses the grammar allows, except that an
/// equality under a unary operator is always parenthesised: `[](x = y)`.
std::string render(const Formula& f);

struct FragmentReport {
  bool is_monadic = true;
  bool is_monodic = true;
  bool is_positive = true;
  bool has_equality = false;
  std::size_t variable_count = 0;
  std::size_t modal_depth = 0;
  int max_letter_arity = 0;

  friend bool operator==(const FragmentReport&, const FragmentReport&) = default;
};

FragmentReport classify(const Formula& f);

}  // namespace monotrick
