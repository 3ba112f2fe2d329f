#include <string>
#include <vector>

#include "monotrick/error.hpp"
#include "monotrick/search.hpp"

namespace monotrick {

std::optional<ClassicalStructure> classical_sat(const Formula& f, std::size_t size_bound) {
  if (!free_variables(f).empty()) throw Error("classical_sat needs a closed formula");
  if (modal_depth(f) > 0) throw Error("classical_sat does not accept modal operators");

  std::string binary = "P";
  std::vector<std::string> unary;
  std::vector<std::string> props;
  bool have_binary = false;
  for (const auto& [name, arity] : letter_arities(f)) {
    if (arity > 2) throw Error("letter " + name + " has arity above two");
    if (arity == 2) {
      if (have_binary) throw Error("classical_sat accepts at most one binary letter");
      have_binary = true;
      binary = name;
    } else if (arity == 1) {
      unary.push_back(name);
    } else {
      props.push_back(name);
    }
  }

  for (std::size_t n = 1; n <= size_bound; ++n) {
    const std::size_t pair_bits = have_binary ? n * n : 0;
    const std::size_t bits = pair_bits + unary.size() * n + props.size();
    if (bits > 62) throw Error("structure space exceeds 2^62 candidates");
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
      ClassicalStructure s;
      s.size = n;
      s.binary_letter = binary;
      auto bit = [&code](std::size_t i) { return ((code >> i) & 1U) != 0; };
      for (std::size_t i = 0; i < pair_bits; ++i) {
        if (bit(i)) s.relation.emplace(static_cast<Individual>(i / n), static_cast<Individual>(i % n));
      }
      std::size_t next = pair_bits;
      for (const auto& name : unary) {
        auto& ext = s.unary[name];
        for (std::size_t a = 0; a < n; ++a, ++next) {
          if (bit(next)) ext.insert(static_cast<Individual>(a));
        }
      }
      for (const auto& name : props) s.propositions[name] = bit(next++);
      if (classical_holds(s, f)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace monotrick
