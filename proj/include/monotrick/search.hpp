#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monotrick/classical.hpp"
#include "monotrick/eval.hpp"
#include "monotrick/formula.hpp"
#include "monotrick/frames.hpp"
#include "monotrick/model.hpp"

namespace monotrick {

enum class Outcome { valid, countermodel, satisfiable, unsatisfiable_up_to_bound, bound_exhausted };

std::string_view to_string(Outcome o) noexcept;
std::optional<Outcome> parse_outcome(std::string_view text) noexcept;

struct Witness {
  Model model;
  World world = 0;
  Assignment assignment;
};

struct Verdict {
  Outcome outcome = Outcome::valid;
  std::size_t world_bound = 0;
  std::size_t domain_bound = 0;
  std::optional<Witness> witness;
  std::vector<std::string> warnings;
};

struct SearchOptions {
  /// 0 uses every OpenMP thread; 1 runs the serial reference loop.
  unsigned workers = 0;
  /// Candidates with an enumeration index at or above the cap are not
  /// examined; if any exist and nothing was found below, the outcome is
  /// bound_exhausted.
  std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();
};

/// First structure of size <= size_bound satisfying the closed formula f.
/// Sizes ascend; within a size the bits are, from least significant: the
/// binary letter's pairs (a,b) at bit a*n+b, then each unary letter (by name)
/// at bit n*k+a, then the propositional letters by name. Throws Error for an
/// open formula, a modality, several binary letters or arity above two.
std::optional<ClassicalStructure> classical_sat(const Formula& f, std::size_t size_bound);

/// First (model, world, assignment) over cls-frames with at most world_bound
/// worlds at which f holds, in the order frames, domain maps, valuations,
/// equality partitions, worlds, assignments. Intuitionistic mode adds
/// reflexive and transitive to cls.
Verdict sat_bounded(const Formula& f, const FrameClass& cls, std::size_t world_bound,
                    std::size_t domain_bound, Mode mode, EqPrinciple eq, bool constant_domains,
                    const SearchOptions& options = {});

/// 2^(unary letters of f) * (variables of f + 1).
std::size_t default_domain_bound(const Formula& f);

/// Largest domain bound the enumerator accepts.
inline constexpr std::size_t kMaxDomainBound = 8;

/// Validity of f over every model on exactly fr with domains up to the bound.
/// Without a bound the heuristic default_domain_bound is used (clamped to
/// kMaxDomainBound) and a warning is recorded; non-monadic input is accepted
/// with a warning. Throws Error when intuitionistic mode meets a frame that
/// is not a preorder.
Verdict decide_valid_over_frame(const Frame& fr, const Formula& f,
                                std::optional<std::size_t> domain_bound, Mode mode,
                                EqPrinciple eq, bool constant_domains,
                                const SearchOptions& options = {});

/// The witness validates and evaluates to the value its outcome claims.
/// Verdicts without a witness pass when their outcome needs none.
bool recheck(const Verdict& v, const Formula& f);

}  // namespace monotrick
