#include "monotrick/model.hpp"

#include <algorithm>
#include <cctype>

#include "monotrick/error.hpp"

namespace monotrick {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::modal ? "modal" : "int";
}

std::string_view to_string(EqPrinciple principle) noexcept {
  switch (principle) {
    case EqPrinciple::eq1: return "eq1";
    case EqPrinciple::eq2: return "eq2";
    case EqPrinciple::eq3: return "eq3";
  }
  return "eq3";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
  if (text == "modal") return Mode::modal;
  if (text == "int" || text == "intuitionistic") return Mode::intuitionistic;
  return std::nullopt;
}

std::optional<EqPrinciple> parse_principle(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "eq1") return EqPrinciple::eq1;
  if (lower == "eq2") return EqPrinciple::eq2;
  if (lower == "eq3") return EqPrinciple::eq3;
  return std::nullopt;
}

// Frame

Frame::Frame(std::vector<std::string> world_names)
    : names_(std::move(world_names)),
      matrix_(names_.size() * names_.size(), 0),
      successors_(names_.size()) {}

Frame Frame::canonical(std::size_t worlds) {
  std::vector<std::string> names;
  names.reserve(worlds);
  for (std::size_t i = 0; i < worlds; ++i) names.push_back("w" + std::to_string(i));
  return Frame(std::move(names));
}

std::optional<World> Frame::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<World>(i);
  }
  return std::nullopt;
}

void Frame::connect(World from, World to) {
  if (from >= size() || to >= size()) throw Error("frame edge refers to an unknown world");
  auto& cell = matrix_[from * size() + to];
  if (cell) return;
  cell = 1;
  auto& succ = successors_[from];
  succ.insert(std::upper_bound(succ.begin(), succ.end(), to), to);
}

std::vector<std::pair<World, World>> Frame::edges() const {
  std::vector<std::pair<World, World>> out;
  for (World w = 0; w < size(); ++w) {
    for (World v : successors_[w]) out.emplace_back(w, v);
  }
  return out;
}

// DomainMap

DomainMap::DomainMap(std::size_t worlds, std::size_t pool, bool constant_domains)
    : pool_(pool), constant_(constant_domains), members_(worlds), bits_(worlds * pool, 0) {}

void DomainMap::add(World w, Individual a) {
  if (a >= pool_ || w >= members_.size()) throw Error("domain entry out of range");
  auto& bit = bits_[w * pool_ + a];
  if (bit) return;
  bit = 1;
  auto& m = members_[w];
  m.insert(std::upper_bound(m.begin(), m.end(), a), a);
}

void DomainMap::assign_prefix(World w, std::size_t n) {
  auto& m = members_[w];
  m.clear();
  for (std::size_t a = 0; a < pool_; ++a) {
    bits_[w * pool_ + a] = a < n ? 1 : 0;
    if (a < n) m.push_back(static_cast<Individual>(a));
  }
}

// Valuation

namespace {

constexpr std::size_t kMaxCodes = std::size_t{1} << 22;

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxCodes / base) throw Error("valuation table too large");
    r *= base;
  }
  return r;
}

}  // namespace

Valuation::Valuation(std::size_t worlds, std::size_t pool) : worlds_(worlds), pool_(pool) {}

void Valuation::allocate(Table& t, int arity) {
  t.arity = arity;
  t.codes = power(pool_, arity);
  t.truth.assign(worlds_ * t.codes, 0);
}

std::size_t Valuation::declare(const std::string& letter, int arity) {
  if (auto it = index_.find(letter); it != index_.end()) {
    Table& t = tables_[it->second];
    if (arity >= 0) {
      if (t.arity < 0) {
        allocate(t, arity);
      } else if (t.arity != arity) {
        throw ArityError("letter " + letter + " declared with arities " +
                         std::to_string(t.arity) + " and " + std::to_string(arity));
      }
    }
    return it->second;
  }
  Table t;
  t.name = letter;
  if (arity >= 0) allocate(t, arity);
  tables_.push_back(std::move(t));
  index_.emplace(letter, tables_.size() - 1);
  return tables_.size() - 1;
}

std::optional<std::size_t> Valuation::find(std::string_view letter) const {
  if (auto it = index_.find(letter); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t Valuation::tuple_code(std::span<const Individual> tuple) const noexcept {
  std::size_t code = 0;
  std::size_t scale = 1;
  for (Individual a : tuple) {
    code += a * scale;
    scale *= pool_;
  }
  return code;
}

bool Valuation::holds(World w, std::size_t letter, std::span<const Individual> tuple) const {
  const Table& t = tables_.at(letter);
  if (t.arity < 0 || static_cast<std::size_t>(t.arity) != tuple.size()) return false;
  return holds_code(w, letter, tuple_code(tuple));
}

void Valuation::set(World w, std::size_t letter, std::span<const Individual> tuple, bool value) {
  Table& t = tables_.at(letter);
  if (t.arity < 0) allocate(t, static_cast<int>(tuple.size()));
  if (static_cast<std::size_t>(t.arity) != tuple.size()) {
    throw ArityError("letter " + t.name + " has arity " + std::to_string(t.arity) +
                     " but a tuple of length " + std::to_string(tuple.size()) + " was given");
  }
  for (Individual a : tuple) {
    if (a >= pool_) throw Error("valuation tuple refers to an unknown individual");
  }
  set_code(w, letter, tuple_code(tuple), value);
}

std::vector<Individual> Valuation::decode(std::size_t letter, std::size_t code) const {
  const Table& t = tables_.at(letter);
  std::vector<Individual> tuple(static_cast<std::size_t>(std::max(t.arity, 0)));
  for (auto& a : tuple) {
    a = static_cast<Individual>(code % pool_);
    code /= pool_;
  }
  return tuple;
}

std::vector<std::vector<Individual>> Valuation::tuples(World w, std::size_t letter) const {
  std::vector<std::vector<Individual>> out;
  const Table& t = tables_.at(letter);
  for (std::size_t code = 0; code < t.codes; ++code) {
    if (holds_code(w, letter, code)) out.push_back(decode(letter, code));
  }
  return out;
}

// EqualityInterpretation

EqualityInterpretation::EqualityInterpretation(std::size_t worlds, std::size_t pool,
                                               EqPrinciple principle)
    : pool_(pool), principle_(principle), rep_(worlds * pool, kNoIndividual) {}

void EqualityInterpretation::reset_identity(const DomainMap& domains) {
  std::fill(rep_.begin(), rep_.end(), kNoIndividual);
  const std::size_t worlds = pool_ == 0 ? 0 : rep_.size() / pool_;
  for (World w = 0; w < worlds; ++w) {
    for (Individual a : domains.members(w)) rep_[w * pool_ + a] = a;
  }
}

void EqualityInterpretation::set_class(World w, std::span<const Individual> members) {
  if (members.empty()) return;
  const Individual rep = *std::min_element(members.begin(), members.end());
  for (Individual a : members) {
    if (a >= pool_) throw FormatError("equality class refers to an unknown individual");
    if (rep_[w * pool_ + a] != kNoIndividual) {
      throw FormatError("individual occurs in two equality classes at one world");
    }
    rep_[w * pool_ + a] = rep;
  }
}

std::vector<std::vector<Individual>> EqualityInterpretation::classes(World w) const {
  std::vector<std::vector<Individual>> out;
  std::vector<std::size_t> slot(pool_, static_cast<std::size_t>(-1));
  for (Individual a = 0; a < pool_; ++a) {
    const Individual r = representative(w, a);
    if (r == kNoIndividual) continue;
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(a);
  }
  return out;
}

// Model

std::optional<Individual> Model::find_individual(std::string_view name) const {
  for (std::size_t i = 0; i < individuals.size(); ++i) {
    if (individuals[i] == name) return static_cast<Individual>(i);
  }
  return std::nullopt;
}

Model make_model(Frame frame, std::vector<std::string> individuals, Mode mode,
                 EqPrinciple principle, bool constant_domains) {
  Model m;
  const std::size_t worlds = frame.size();
  const std::size_t pool = individuals.size();
  m.frame = std::move(frame);
  m.individuals = std::move(individuals);
  m.domains = DomainMap(worlds, pool, constant_domains);
  m.valuation = Valuation(worlds, pool);
  m.equality = EqualityInterpretation(worlds, pool, principle);
  m.mode = mode;
  return m;
}

}  // namespace monotrick
