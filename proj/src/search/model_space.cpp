#include "monotrick/model_space.hpp"

#include <array>
#include <limits>

#include "monotrick/error.hpp"

namespace monotrick {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kMaxValuationBits = 62;

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::vector<Individual>> build_partitions(std::size_t n) {
  std::vector<std::vector<Individual>> out;
  std::vector<std::size_t> label(n, 0);
  std::vector<Individual> first;  // first member of each label
  // Restricted growth strings in lexicographic order.
  auto emit = [&] {
    std::vector<Individual> rep(n);
    std::vector<Individual> seen(n + 1, kNoIndividual);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[label[i]] == kNoIndividual) seen[label[i]] = static_cast<Individual>(i);
      rep[i] = seen[label[i]];
    }
    out.push_back(std::move(rep));
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_label) {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t c = 0; c <= max_label + 1; ++c) {
      label[i] = c;
      rec(i + 1, std::max(max_label, c));
    }
  };
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  label[0] = 0;
  rec(1, 0);
  return out;
}

struct PartitionTables {
  std::array<std::vector<std::vector<Individual>>, 9> all;
  std::array<std::vector<std::vector<Individual>>, 9> identity;

  PartitionTables() {
    for (std::size_t n = 0; n < all.size(); ++n) {
      all[n] = build_partitions(n);
      std::vector<Individual> id(n);
      for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Individual>(i);
      identity[n] = {id};
    }
  }
};

const PartitionTables& tables() {
  static const PartitionTables t;
  return t;
}

const std::vector<std::vector<Individual>>& partition_list(std::size_t n, bool identity_only) {
  if (n >= tables().all.size()) throw Error("domain bound above 8 is not supported");
  return identity_only ? tables().identity[n] : tables().all[n];
}

}  // namespace

const std::vector<std::vector<Individual>>& partitions_of(std::size_t n) {
  return partition_list(n, false);
}

std::vector<LetterSignature> signature_of(const Formula& f) {
  std::vector<LetterSignature> out;
  for (const auto& [name, arity] : letter_arities(f)) out.push_back({name, arity});
  return out;
}

ModelSpace::ModelSpace(Frame frame, std::vector<LetterSignature> letters, SpaceConfig config)
    : frame_(std::move(frame)), letters_(std::move(letters)), config_(config) {
  if (config_.domain_bound == 0) throw Error("domain bound must be at least 1");
  if (config_.domain_bound >= 9) throw Error("domain bound above 8 is not supported");
  const std::size_t n = frame_.size();
  const auto edges = frame_.edges();
  std::vector<std::size_t> sizes(n, 1);
  for (;;) {
    bool ok = true;
    for (auto [w, v] : edges) {
      if (sizes[w] > sizes[v]) ok = false;
    }
    if (config_.constant_domains) {
      for (std::size_t w = 1; w < n; ++w) {
        if (sizes[w] != sizes[0]) ok = false;
      }
    }
    if (ok) maps_.push_back(sizes);
    std::size_t i = 0;
    while (i < n && ++sizes[i] > config_.domain_bound) sizes[i++] = 1;
    if (i == n) break;
  }
}

std::uint64_t ModelSpace::block_size(std::size_t domain_map) const {
  const auto& sizes = maps_.at(domain_map);
  std::size_t bits = 0;
  for (const auto& l : letters_) {
    for (std::size_t s : sizes) bits += ipow(s, l.arity);
  }
  std::uint64_t eq = 1;
  if (config_.equality != EqPrinciple::eq3) {
    for (std::size_t s : sizes) eq = mul_sat(eq, partitions_of(s).size());
  }
  if (bits >= 64) return kSaturated;
  return mul_sat(std::uint64_t{1} << bits, eq);
}

std::uint64_t ModelSpace::candidate_count() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < maps_.size(); ++i) total = add_sat(total, block_size(i));
  return total;
}

ModelSpace::Block ModelSpace::block(std::size_t domain_map) const {
  const auto& sizes = maps_.at(domain_map);
  const std::size_t pool = config_.domain_bound;
  std::vector<std::string> individuals;
  for (std::size_t a = 0; a < pool; ++a) individuals.push_back(std::to_string(a));

  Block b;
  b.principle_ = config_.equality;
  b.sizes_ = sizes;
  b.model_ = std::make_unique<Model>(make_model(frame_, std::move(individuals), config_.mode,
                                                config_.equality.value_or(EqPrinciple::eq1),
                                                config_.constant_domains));
  Model& m = *b.model_;
  for (World w = 0; w < frame_.size(); ++w) m.domains.assign_prefix(w, sizes[w]);
  m.equality.reset_identity(m.domains);

  // bit_of[letter][world][code] -> bit index
  std::vector<std::vector<std::vector<std::uint32_t>>> bit_of(letters_.size());
  for (std::size_t l = 0; l < letters_.size(); ++l) {
    const auto letter = static_cast<std::uint32_t>(m.valuation.declare(letters_[l].name,
                                                                       letters_[l].arity));
    const int arity = letters_[l].arity;
    const std::size_t codes = m.valuation.code_count(letter);
    bit_of[l].assign(frame_.size(), std::vector<std::uint32_t>(codes, UINT32_MAX));
    for (World w = 0; w < frame_.size(); ++w) {
      std::vector<Individual> tuple(static_cast<std::size_t>(arity), 0);
      for (;;) {
        const std::size_t code = m.valuation.tuple_code(tuple);
        bit_of[l][w][code] = static_cast<std::uint32_t>(b.bits_.size());
        b.bits_.push_back({letter, w, code});
        std::size_t i = 0;
        while (i < tuple.size() && ++tuple[i] >= sizes[w]) tuple[i++] = 0;
        if (i == tuple.size()) break;
      }
    }
  }

  if (config_.mode == Mode::intuitionistic) {
    for (auto [w, v] : frame_.edges()) {
      if (w == v) continue;
      for (std::size_t l = 0; l < letters_.size(); ++l) {
        for (std::size_t code = 0; code < bit_of[l][w].size(); ++code) {
          const std::uint32_t from = bit_of[l][w][code];
          if (from != UINT32_MAX) b.hereditary_.emplace_back(from, bit_of[l][v][code]);
        }
      }
    }
  }

  const bool identity_only = config_.equality == EqPrinciple::eq3;
  for (std::size_t s : sizes) {
    b.partitions_.push_back(&partition_list(s, identity_only));
    b.equality_count_ = mul_sat(b.equality_count_, b.partitions_.back()->size());
  }
  return b;
}

std::uint64_t ModelSpace::Block::valuation_count() const {
  if (bits_.size() > kMaxValuationBits) throw Error("valuation space exceeds 2^62 candidates");
  return std::uint64_t{1} << bits_.size();
}

std::uint64_t ModelSpace::Block::size() const {
  if (bits_.size() > kMaxValuationBits) return kSaturated;
  return mul_sat(valuation_count(), equality_count_);
}

bool ModelSpace::Block::load_valuation(std::uint64_t code) {
  Valuation& val = model_->valuation;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    val.set_code(bits_[i].world, bits_[i].letter, bits_[i].code, ((code >> i) & 1U) != 0);
  }
  for (auto [from, to] : hereditary_) {
    if (((code >> from) & 1U) && !((code >> to) & 1U)) return false;
  }
  return true;
}

bool ModelSpace::Block::load_equality(std::uint64_t code) {
  Model& m = *model_;
  auto& eq = m.equality;
  for (World w = 0; w < partitions_.size(); ++w) {
    const auto& options = *partitions_[w];
    const auto& rep = options[code % options.size()];
    code /= options.size();
    for (std::size_t a = 0; a < rep.size(); ++a) {
      eq.set_representative(w, static_cast<Individual>(a), rep[a]);
    }
  }
  if (principle_ == EqPrinciple::eq3) return true;

  const Valuation& val = m.valuation;
  const std::size_t pool = m.individuals.size();
  for (const Bit& bit : bits_) {
    const int arity = val.arity(bit.letter);
    if (arity == 0) continue;
    std::size_t rest = bit.code;
    std::size_t image = 0;
    std::size_t scale = 1;
    for (int i = 0; i < arity; ++i) {
      image += eq.representative(bit.world, static_cast<Individual>(rest % pool)) * scale;
      rest /= pool;
      scale *= pool;
    }
    if (image != bit.code &&
        val.holds_code(bit.world, bit.letter, bit.code) !=
            val.holds_code(bit.world, bit.letter, image)) {
      return false;
    }
  }

  if (!principle_) return true;
  for (auto [w, v] : m.frame.edges()) {
    const std::size_t s = sizes_[w];
    for (Individual a = 0; a < s; ++a) {
      for (Individual b = a + 1; b < s; ++b) {
        const bool here = eq.same(w, a, b);
        const bool there = eq.same(v, a, b);
        if (here && !there) return false;
        if (principle_ == EqPrinciple::eq2 && there && !here) return false;
      }
    }
  }
  return true;
}

bool ModelSpace::for_each(const std::function<bool(const Model&)>& visit) const {
  for (std::size_t dm = 0; dm < maps_.size(); ++dm) {
    Block b = block(dm);
    const std::uint64_t vals = b.valuation_count();
    for (std::uint64_t v = 0; v < vals; ++v) {
      if (!b.load_valuation(v)) continue;
      for (std::uint64_t e = 0; e < b.equality_count(); ++e) {
        if (!b.load_equality(e)) continue;
        if (!visit(b.model())) return false;
      }
    }
  }
  return true;
}

}  // namespace monotrick
