#include "monotrick/experiment.hpp"

#include <chrono>
#include <optional>

#include "monotrick/error.hpp"
#include "monotrick/eval.hpp"
#include "monotrick/syntax.hpp"

namespace monotrick {

std::vector<Formula> parse_corpus(std::string_view text) {
  std::vector<Formula> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const std::string_view code = line.substr(0, line.find('#'));
    if (code.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(parse(line));
    } catch (const ParseError& e) {
      // strip the "1:col: " prefix parse() put in front of the message
      std::string message = e.what();
      if (auto colon = message.find(": "); colon != std::string::npos) message.erase(0, colon + 2);
      throw ParseError(message, line_no, e.column(), e.expected());
    }
  }
  return out;
}

std::vector<ClassicalStructure> enumerate_structures(std::size_t size_bound,
                                                     bool symmetric_irreflexive) {
  std::vector<ClassicalStructure> out;
  for (std::size_t n = 1; n <= size_bound; ++n) {
    std::vector<std::pair<Individual, Individual>> slots;
    for (Individual a = 0; a < n; ++a) {
      for (Individual b = 0; b < n; ++b) {
        if (!symmetric_irreflexive || a < b) slots.emplace_back(a, b);
      }
    }
    if (slots.size() > 40) throw Error("too many structures to enumerate");
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
      ClassicalStructure s;
      s.size = n;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!((code >> i) & 1U)) continue;
        auto [a, b] = slots[i];
        s.relation.emplace(a, b);
        if (symmetric_irreflexive) s.relation.emplace(b, a);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

std::string binary_letter_of(const Formula& f) {
  for (const auto& [name, arity] : letter_arities(f)) {
    if (arity == 2) return name;
  }
  return "P";
}

}  // namespace

ExperimentReport trick_experiment(const std::vector<Formula>& corpus, Variant variant,
                                  std::size_t size_bound) {
  if (variant != Variant::diamond2 && variant != Variant::neg_diamond1) {
    throw TranslationError("variant " + std::string(to_string(variant)) +
                           " has no companion model");
  }
  const auto started = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.variant = variant;
  report.size_bound = size_bound;
  auto structures = enumerate_structures(size_bound, variant == Variant::neg_diamond1);
  report.structure_count = structures.size();

  const NamingScheme names;
  std::vector<CompanionModel> companions;
  companions.reserve(structures.size());
  for (const auto& s : structures) companions.push_back(build_companion_model(s, variant, names));

  for (const Formula& f : corpus) {
    std::optional<Formula> translated;
    std::string reason;
    if (!free_variables(f).empty()) {
      reason = "formula is not closed";
    } else {
      try {
        translated = kripke_trick(f, variant, names).formula;
      } catch (const Error& e) {
        reason = e.what();
      }
    }
    if (!translated) {
      report.skipped.push_back({f, reason});
      continue;
    }
    ++report.corpus_size;
    const std::string letter = binary_letter_of(f);
    for (std::size_t i = 0; i < structures.size(); ++i) {
      structures[i].binary_letter = letter;
      const bool classical = classical_holds(structures[i], f);
      const auto& companion = companions[i];
      const bool modal = Evaluator(companion.model, *translated).holds(companion.root, Assignment{});
      if (classical == modal) {
        ++report.agreements;
      } else {
        report.disagreements.push_back({f, structures[i], classical, modal});
      }
    }
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace monotrick
