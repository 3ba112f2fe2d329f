#include "monotrick/eval.hpp"

#include <algorithm>
#include <array>

#include "monotrick/error.hpp"

namespace monotrick {

namespace {

constexpr std::size_t kInlineSlots = 32;

// Odometer step with the last position fastest; false once it wraps.
bool advance(std::vector<std::size_t>& pos, std::size_t radix) {
  for (std::size_t i = pos.size(); i-- > 0;) {
    if (++pos[i] < radix) return true;
    pos[i] = 0;
  }
  return false;
}

}  // namespace

Evaluator::Evaluator(const Model& model, const Formula& formula) : model_(&model) {
  const auto vars = all_variables(formula);
  slots_.assign(vars.begin(), vars.end());
  const auto free = monotrick::free_variables(formula);
  free_.assign(free.begin(), free.end());
  for (const auto& v : free_) {
    free_slot_.push_back(static_cast<std::uint32_t>(
        std::lower_bound(slots_.begin(), slots_.end(), v) - slots_.begin()));
  }
  const std::size_t pool = model.individuals.size();
  std::size_t s = 1;
  for (int i = 0; i < 8; ++i) {
    scale_.push_back(s);
    s *= std::max<std::size_t>(pool, 1);
  }
  root_ = compile(formula);
}

std::uint32_t Evaluator::compile(const Formula& f) {
  Op op{f.kind()};
  switch (f.kind()) {
    case Kind::atom: {
      const auto& args = f.arguments();
      if (args.size() > scale_.size()) throw EvalError("letter " + f.letter() + " has too many arguments");
      op.arity = static_cast<std::uint32_t>(args.size());
      op.args_begin = static_cast<std::uint32_t>(args_.size());
      for (const auto& v : args) {
        args_.push_back(static_cast<std::uint32_t>(
            std::lower_bound(slots_.begin(), slots_.end(), v) - slots_.begin()));
      }
      if (auto idx = model_->valuation.find(f.letter())) {
        const int arity = model_->valuation.arity(*idx);
        if (arity >= 0 && arity != static_cast<int>(args.size())) {
          throw EvalError("letter " + f.letter() + " has arity " + std::to_string(arity) +
                          " in the model but " + std::to_string(args.size()) + " in the formula");
        }
        op.letter_known = arity >= 0;
        op.letter = static_cast<std::uint32_t>(*idx);
      }
      break;
    }
    case Kind::equality:
      op.lhs = static_cast<std::uint32_t>(
          std::lower_bound(slots_.begin(), slots_.end(), f.arguments()[0]) - slots_.begin());
      op.rhs = static_cast<std::uint32_t>(
          std::lower_bound(slots_.begin(), slots_.end(), f.arguments()[1]) - slots_.begin());
      break;
    case Kind::falsum:
    case Kind::verum:
      break;
    case Kind::box:
    case Kind::diamond:
      if (model_->mode == Mode::intuitionistic) {
        throw EvalError("modal operators are not allowed in intuitionistic mode");
      }
      op.lhs = compile(f.body());
      break;
    case Kind::forall:
    case Kind::exists:
      op.slot = static_cast<std::uint32_t>(
          std::lower_bound(slots_.begin(), slots_.end(), f.variable()) - slots_.begin());
      op.lhs = compile(f.body());
      break;
    case Kind::negation:
      op.lhs = compile(f.body());
      break;
    default:
      op.lhs = compile(f.lhs());
      op.rhs = compile(f.rhs());
      break;
  }
  ops_.push_back(op);
  return static_cast<std::uint32_t>(ops_.size() - 1);
}

bool Evaluator::modal(std::uint32_t index, World w, Individual* slots) const {
  const Op& op = ops_[index];
  const Model& m = *model_;
  switch (op.kind) {
    case Kind::atom: {
      if (!op.letter_known) return false;
      std::size_t code = 0;
      for (std::uint32_t i = 0; i < op.arity; ++i) code += slots[args_[op.args_begin + i]] * scale_[i];
      return m.valuation.holds_code(w, op.letter, code);
    }
    case Kind::equality:
      return m.equality.same(w, slots[op.lhs], slots[op.rhs]);
    case Kind::falsum:
      return false;
    case Kind::verum:
      return true;
    case Kind::negation:
      return !modal(op.lhs, w, slots);
    case Kind::conjunction:
      return modal(op.lhs, w, slots) && modal(op.rhs, w, slots);
    case Kind::disjunction:
      return modal(op.lhs, w, slots) || modal(op.rhs, w, slots);
    case Kind::implication:
      return !modal(op.lhs, w, slots) || modal(op.rhs, w, slots);
    case Kind::biconditional:
      return modal(op.lhs, w, slots) == modal(op.rhs, w, slots);
    case Kind::box:
      for (World v : m.frame.successors(w)) {
        if (!modal(op.lhs, v, slots)) return false;
      }
      return true;
    case Kind::diamond:
      for (World v : m.frame.successors(w)) {
        if (modal(op.lhs, v, slots)) return true;
      }
      return false;
    case Kind::forall:
    case Kind::exists: {
      const bool universal = op.kind == Kind::forall;
      const Individual saved = slots[op.slot];
      bool result = universal;
      for (Individual a : m.domains.members(w)) {
        slots[op.slot] = a;
        if (modal(op.lhs, w, slots) != universal) {
          result = !universal;
          break;
        }
      }
      slots[op.slot] = saved;
      return result;
    }
  }
  return false;
}

bool Evaluator::intuitionistic(std::uint32_t index, World w, Individual* slots) const {
  const Op& op = ops_[index];
  const Model& m = *model_;
  switch (op.kind) {
    case Kind::atom:
    case Kind::equality:
    case Kind::falsum:
    case Kind::verum:
      return modal(index, w, slots);
    case Kind::conjunction:
      return intuitionistic(op.lhs, w, slots) && intuitionistic(op.rhs, w, slots);
    case Kind::disjunction:
      return intuitionistic(op.lhs, w, slots) || intuitionistic(op.rhs, w, slots);
    case Kind::negation:
      for (World v : m.frame.successors(w)) {
        if (intuitionistic(op.lhs, v, slots)) return false;
      }
      return true;
    case Kind::implication:
      for (World v : m.frame.successors(w)) {
        if (intuitionistic(op.lhs, v, slots) && !intuitionistic(op.rhs, v, slots)) return false;
      }
      return true;
    case Kind::biconditional:
      for (World v : m.frame.successors(w)) {
        if (intuitionistic(op.lhs, v, slots) != intuitionistic(op.rhs, v, slots)) return false;
      }
      return true;
    case Kind::exists: {
      const Individual saved = slots[op.slot];
      bool result = false;
      for (Individual a : m.domains.members(w)) {
        slots[op.slot] = a;
        if (intuitionistic(op.lhs, w, slots)) {
          result = true;
          break;
        }
      }
      slots[op.slot] = saved;
      return result;
    }
    case Kind::forall: {
      const Individual saved = slots[op.slot];
      bool result = true;
      for (World v : m.frame.successors(w)) {
        for (Individual a : m.domains.members(v)) {
          slots[op.slot] = a;
          if (!intuitionistic(op.lhs, v, slots)) {
            result = false;
            break;
          }
        }
        if (!result) break;
      }
      slots[op.slot] = saved;
      return result;
    }
    case Kind::box:
    case Kind::diamond:
      break;
  }
  throw EvalError("modal operators are not allowed in intuitionistic mode");
}

bool Evaluator::run(World w, Individual* slots) const {
  return model_->mode == Mode::modal ? modal(root_, w, slots) : intuitionistic(root_, w, slots);
}

bool Evaluator::holds(World w, std::span<const Individual> values) const {
  std::array<Individual, kInlineSlots> inline_slots;
  std::vector<Individual> heap_slots;
  Individual* slots = inline_slots.data();
  if (slots_.size() > kInlineSlots) {
    heap_slots.resize(slots_.size());
    slots = heap_slots.data();
  }
  std::fill(slots, slots + slots_.size(), kNoIndividual);
  for (std::size_t i = 0; i < free_slot_.size() && i < values.size(); ++i) {
    slots[free_slot_[i]] = values[i];
  }
  return run(w, slots);
}

bool Evaluator::holds(World w, const Assignment& sigma) const {
  const Model& m = *model_;
  if (w >= m.frame.size()) throw EvalError("unknown world index " + std::to_string(w));
  std::vector<Individual> values;
  values.reserve(free_.size());
  for (const auto& v : free_) {
    auto it = sigma.find(v);
    if (it == sigma.end()) throw EvalError("free variable " + v + " is not assigned");
    if (it->second >= m.individuals.size() || !m.domains.contains(w, it->second)) {
      const std::string name = it->second < m.individuals.size()
                                   ? m.individuals[it->second]
                                   : "#" + std::to_string(it->second);
      throw EvalError("individual " + name + " assigned to " + v + " is outside the domain of " +
                      m.frame.name(w));
    }
    values.push_back(it->second);
  }
  return holds(w, values);
}

bool eval(const Model& m, World w, const Assignment& sigma, const Formula& f) {
  return Evaluator(m, f).holds(w, sigma);
}

ModelCheck valid_in_model(const Model& m, const Formula& f) {
  const Evaluator ev(m, f);
  const auto& vars = ev.free_variables();
  std::vector<Individual> values(vars.size());
  std::vector<std::size_t> pos(vars.size());
  for (World w = 0; w < m.frame.size(); ++w) {
    const auto& dom = m.domains.members(w);
    if (dom.empty() && !vars.empty()) continue;
    std::fill(pos.begin(), pos.end(), 0);
    do {
      for (std::size_t i = 0; i < vars.size(); ++i) values[i] = dom[pos[i]];
      if (!ev.holds(w, values)) {
        Falsifier fal{w, {}};
        for (std::size_t i = 0; i < vars.size(); ++i) fal.assignment[vars[i]] = values[i];
        return {false, std::move(fal)};
      }
    } while (advance(pos, dom.size()));
  }
  return {};
}

}  // namespace monotrick
