#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monotrick/formula.hpp"
#include "monotrick/model.hpp"
#include "monotrick/search.hpp"

namespace monotrick {

struct SeparationCandidate {
  Formula formula;
  Mode mode = Mode::modal;
};

/// Equality schemes in both languages, e.g. `<>(x = y) -> x = y` and
/// `x = y | ~(x = y)`.
std::vector<SeparationCandidate> default_separation_candidates();

/// A frame on which `formula` is valid under `stronger` (within the domain
/// bound) but refuted under `weaker`.
struct Separation {
  EqPrinciple stronger = EqPrinciple::eq3;
  EqPrinciple weaker = EqPrinciple::eq2;
  Frame frame;
  Formula formula;
  Mode mode = Mode::modal;
  Verdict refutation;  // countermodel under `weaker`
};

struct SeparationReport {
  std::optional<Separation> eq3_over_eq2;
  std::optional<Separation> eq2_over_eq1;
  std::size_t world_bound = 0;
  std::size_t domain_bound = 0;
  std::size_t frames_searched = 0;
  std::size_t candidates = 0;
};

/// Frames in enumeration order (preorders only for intuitionistic
/// candidates), then candidates in list order; the first separating pair
/// for each principle pair is kept.
SeparationReport find_eq_separations(const std::vector<SeparationCandidate>& candidates,
                                     std::size_t world_bound, std::size_t domain_bound,
                                     const SearchOptions& options = {});

}  // namespace monotrick
