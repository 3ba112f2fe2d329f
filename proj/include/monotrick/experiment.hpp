#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monotrick/classical.hpp"
#include "monotrick/formula.hpp"
#include "monotrick/translate.hpp"

namespace monotrick {

/// One formula per non-blank line; `#` comments are allowed. ParseError
/// positions refer to the whole text.
std::vector<Formula> parse_corpus(std::string_view text);

/// Every structure of size 1..size_bound over the binary letter P, sizes
/// ascending and relations counted upwards with pair (a,b) at bit a*n+b.
/// With symmetric_irreflexive only graphs are produced, edge {a,b} (a < b)
/// taking bits in lexicographic order.
std::vector<ClassicalStructure> enumerate_structures(std::size_t size_bound,
                                                     bool symmetric_irreflexive);

struct Disagreement {
  Formula formula;
  ClassicalStructure structure;
  bool classical = false;
  bool modal = false;
};

struct SkippedFormula {
  Formula formula;
  std::string reason;
};

/// corpus_size counts the formulas that were compared; agreements plus
/// disagreements always equals corpus_size * structure_count.
struct ExperimentReport {
  Variant variant = Variant::diamond2;
  std::size_t size_bound = 0;
  std::size_t corpus_size = 0;
  std::size_t structure_count = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::vector<SkippedFormula> skipped;
  double wall_time_ms = 0;
};

/// Compares classical truth of each closed corpus sentence with the truth of
/// its translation at the companion root, over every structure up to the
/// bound (graphs only for neg_diamond1). Formulas outside the translation's
/// signature are skipped with a reason. Throws TranslationError for variants
/// without a companion model.
ExperimentReport trick_experiment(const std::vector<Formula>& corpus, Variant variant,
                                  std::size_t size_bound);

}  // namespace monotrick
