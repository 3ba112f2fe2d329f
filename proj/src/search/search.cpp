#include "monotrick/search.hpp"

#include <algorithm>

#include "kernel.hpp"
#include "monotrick/error.hpp"
#include "monotrick/model_space.hpp"
#include "monotrick/syntax.hpp"

namespace monotrick {

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::valid: return "valid";
    case Outcome::countermodel: return "countermodel";
    case Outcome::satisfiable: return "satisfiable";
    case Outcome::unsatisfiable_up_to_bound: return "unsatisfiable_up_to_bound";
    case Outcome::bound_exhausted: return "bound_exhausted";
  }
  return "valid";
}

std::optional<Outcome> parse_outcome(std::string_view text) noexcept {
  for (Outcome o : {Outcome::valid, Outcome::countermodel, Outcome::satisfiable,
                    Outcome::unsatisfiable_up_to_bound, Outcome::bound_exhausted}) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

namespace {

void require_evaluable(const Formula& f, Mode mode) {
  if (mode == Mode::intuitionistic && modal_depth(f) > 0) {
    throw EvalError("modal operators have no intuitionistic reading");
  }
}

detail::ScanResult run_scan(const detail::SpaceSource& source, const Formula& f, bool want,
                            const SearchOptions& options) {
  if (options.workers == 1) return detail::scan_serial(source, f, want, options.max_steps);
  return detail::scan_parallel(source, f, want, options.max_steps, options.workers);
}

}  // namespace

Verdict sat_bounded(const Formula& f, const FrameClass& cls, std::size_t world_bound,
                    std::size_t domain_bound, Mode mode, EqPrinciple eq, bool constant_domains,
                    const SearchOptions& options) {
  if (world_bound == 0 || domain_bound == 0) throw Error("bounds must be at least 1");
  if (domain_bound > kMaxDomainBound) {
    throw Error("domain bound above " + std::to_string(kMaxDomainBound) + " is not supported");
  }
  require_evaluable(f, mode);
  FrameClass effective = cls;
  if (mode == Mode::intuitionistic) {
    effective = effective.with(FrameProperty::reflexive).with(FrameProperty::transitive);
  }
  const auto frames = enumerate_frames(world_bound, effective);
  const auto letters = signature_of(f);
  const SpaceConfig config{mode, eq, constant_domains, domain_bound};
  const detail::SpaceSource source = [&](std::size_t i) -> std::shared_ptr<const ModelSpace> {
    if (i >= frames.size()) return nullptr;
    return std::make_shared<const ModelSpace>(frames[i], letters, config);
  };

  Verdict v;
  v.world_bound = world_bound;
  v.domain_bound = domain_bound;
  const auto scan = run_scan(source, f, true, options);
  if (scan.hit) {
    v.outcome = Outcome::satisfiable;
    v.witness = detail::materialize(*scan.hit, f);
  } else {
    v.outcome = scan.exhausted ? Outcome::bound_exhausted : Outcome::unsatisfiable_up_to_bound;
  }
  return v;
}

std::size_t default_domain_bound(const Formula& f) {
  std::size_t unary = 0;
  for (const auto& [name, arity] : letter_arities(f)) {
    if (arity == 1) ++unary;
  }
  const std::size_t vars = all_variables(f).size() + 1;
  if (unary >= 16) return std::numeric_limits<std::size_t>::max();
  return (std::size_t{1} << unary) * vars;
}

Verdict decide_valid_over_frame(const Frame& fr, const Formula& f,
                                std::optional<std::size_t> domain_bound, Mode mode,
                                EqPrinciple eq, bool constant_domains,
                                const SearchOptions& options) {
  if (fr.size() == 0) throw Error("frame has no worlds");
  require_evaluable(f, mode);
  Verdict v;
  if (mode == Mode::intuitionistic) {
    const auto props = frame_properties(fr);
    if (!props.reflexive || !props.transitive) {
      throw Error("intuitionistic mode needs a reflexive and transitive frame");
    }
  }
  if (!classify(f).is_monadic) {
    v.warnings.push_back("formula is not monadic; the decidability guarantee does not apply");
  }
  std::size_t bound = 0;
  if (domain_bound) {
    bound = *domain_bound;
    if (bound == 0) throw Error("domain bound must be at least 1");
    if (bound > kMaxDomainBound) {
      throw Error("domain bound above " + std::to_string(kMaxDomainBound) + " is not supported");
    }
  } else {
    const std::size_t heuristic = default_domain_bound(f);
    bound = std::min(heuristic, kMaxDomainBound);
    std::string note = "domain bound " + std::to_string(bound) +
                       " is a heuristic default; valid means valid up to this bound";
    if (bound != heuristic) note += " (clamped from " + std::to_string(heuristic) + ")";
    v.warnings.push_back(std::move(note));
  }

  const auto space = std::make_shared<const ModelSpace>(
      fr, signature_of(f), SpaceConfig{mode, eq, constant_domains, bound});
  const detail::SpaceSource source = [&](std::size_t i) -> std::shared_ptr<const ModelSpace> {
    return i == 0 ? space : nullptr;
  };

  v.world_bound = fr.size();
  v.domain_bound = bound;
  const auto scan = run_scan(source, f, false, options);
  if (scan.hit) {
    v.outcome = Outcome::countermodel;
    v.witness = detail::materialize(*scan.hit, f);
  } else {
    v.outcome = scan.exhausted ? Outcome::bound_exhausted : Outcome::valid;
  }
  return v;
}

bool recheck(const Verdict& v, const Formula& f) {
  const bool needs_witness =
      v.outcome == Outcome::countermodel || v.outcome == Outcome::satisfiable;
  if (!needs_witness) return !v.witness.has_value();
  if (!v.witness) return false;
  const Witness& w = *v.witness;
  if (!validate_model(w.model).ok()) return false;
  try {
    return eval(w.model, w.world, w.assignment, f) == (v.outcome == Outcome::satisfiable);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace monotrick
