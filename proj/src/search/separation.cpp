#include "monotrick/separation.hpp"

#include "monotrick/syntax.hpp"

namespace monotrick {

std::vector<SeparationCandidate> default_separation_candidates() {
  const char* modal[] = {
      "<>(x = y) -> x = y",
      "[](x = y) -> x = y",
      "x = y -> [](x = y)",
      "x = y <-> [](x = y)",
      "~(x = y) -> []~(x = y)",
      "<>~(x = y) -> ~(x = y)",
      "<>[](x = y) -> x = y",
      "x = y -> [][](x = y)",
      "forall x forall y (<>(x = y) -> x = y)",
      "exists x exists y ~(x = y) -> []exists x exists y ~(x = y)",
      "<>exists x exists y ~(x = y) -> exists x exists y ~(x = y)",
      "x = y & Q(x) -> Q(y)",
      "<>(x = y) -> (Q(x) -> Q(y))",
      "x = y -> (<>Q(x) -> <>Q(y))",
      "<>(x = y & Q(x)) -> <>Q(y)",
      "forall x <>Q(x) -> <>forall x Q(x) | <>exists x exists y ~(x = y)",
  };
  const char* intuitionistic[] = {
      "x = y | ~(x = y)",
      "~~(x = y) -> x = y",
      "forall x forall y (x = y | ~(x = y))",
      "~(x = y) | ~~(x = y)",
      "(x = y -> Q(x)) -> Q(x) | ~(x = y)",
  };
  std::vector<SeparationCandidate> out;
  for (const char* text : modal) out.push_back({parse(text), Mode::modal});
  for (const char* text : intuitionistic) out.push_back({parse(text), Mode::intuitionistic});
  return out;
}

namespace {

std::optional<Separation> separate(const Frame& fr, const SeparationCandidate& c,
                                   EqPrinciple stronger, EqPrinciple weaker,
                                   std::size_t domain_bound, const SearchOptions& options) {
  // the stronger principle has the smaller model space, so it goes first
  const Verdict strong = decide_valid_over_frame(fr, c.formula, domain_bound, c.mode, stronger,
                                                 false, options);
  if (strong.outcome != Outcome::valid) return std::nullopt;
  Verdict weak = decide_valid_over_frame(fr, c.formula, domain_bound, c.mode, weaker, false,
                                         options);
  if (weak.outcome != Outcome::countermodel) return std::nullopt;
  return Separation{stronger, weaker, fr, c.formula, c.mode, std::move(weak)};
}

}  // namespace

SeparationReport find_eq_separations(const std::vector<SeparationCandidate>& candidates,
                                     std::size_t world_bound, std::size_t domain_bound,
                                     const SearchOptions& options) {
  SeparationReport report;
  report.world_bound = world_bound;
  report.domain_bound = domain_bound;
  report.candidates = candidates.size();
  for_each_frame(world_bound, FrameClass{}, [&](const Frame& fr) {
    ++report.frames_searched;
    const auto props = frame_properties(fr);
    const bool preorder = props.reflexive && props.transitive;
    for (const auto& c : candidates) {
      if (c.mode == Mode::intuitionistic && !preorder) continue;
      if (!report.eq3_over_eq2) {
        report.eq3_over_eq2 =
            separate(fr, c, EqPrinciple::eq3, EqPrinciple::eq2, domain_bound, options);
      }
      if (!report.eq2_over_eq1) {
        report.eq2_over_eq1 =
            separate(fr, c, EqPrinciple::eq2, EqPrinciple::eq1, domain_bound, options);
      }
    }
    return !(report.eq3_over_eq2 && report.eq2_over_eq1);
  });
  return report;
}

}  // namespace monotrick
