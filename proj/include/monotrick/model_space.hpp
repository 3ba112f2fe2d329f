#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monotrick/formula.hpp"
#include "monotrick/model.hpp"

namespace monotrick {

struct LetterSignature {
  std::string name;
  int arity = 0;

  friend bool operator==(const LetterSignature&, const LetterSignature&) = default;
};

/// Letters of f in name order.
std::vector<LetterSignature> signature_of(const Formula& f);

struct SpaceConfig {
  Mode mode = Mode::modal;
  /// nullopt enumerates every congruent partition family regardless of
  /// heredity; such models are labelled eq1.
  std::optional<EqPrinciple> equality = EqPrinciple::eq3;
  bool constant_domains = false;
  std::size_t domain_bound = 1;
};

/// All models on one frame over a fixed signature, in a fixed order:
///
///   1. domain maps: each world gets a prefix {0..s-1} of the pool,
///      1 <= s <= domain_bound, read as a mixed-radix number with world 0
///      least significant; maps that shrink along an edge (or differ, for
///      constant domains) are skipped;
///   2. valuations: one bit per (letter, world, tuple over D(w)), letters in
///      name order, then worlds, then tuples by code; counted upwards;
///   3. equality: one partition of D(w) per world, partitions in restricted
///      growth string order, world 0 least significant.
///
/// A candidate is a (domain map, valuation code, equality code) triple; those
/// that break heredity, congruence or the equality principle are skipped but
/// still counted, so candidate indices depend only on the inputs.
class ModelSpace {
 public:
  ModelSpace(Frame frame, std::vector<LetterSignature> letters, SpaceConfig config);

  class Block;

  const Frame& frame() const noexcept { return frame_; }
  const SpaceConfig& config() const noexcept { return config_; }
  const std::vector<LetterSignature>& letters() const noexcept { return letters_; }

  /// Per-world domain sizes, in enumeration order.
  const std::vector<std::vector<std::size_t>>& domain_maps() const noexcept { return maps_; }

  Block block(std::size_t domain_map) const;

  /// Candidates in one domain map without building it, saturating.
  std::uint64_t block_size(std::size_t domain_map) const;

  /// Total candidates, saturating at UINT64_MAX.
  std::uint64_t candidate_count() const;

  /// Visits every admissible model in order until visit returns false.
  /// Returns false when stopped early.
  bool for_each(const std::function<bool(const Model&)>& visit) const;

 private:
  Frame frame_;
  std::vector<LetterSignature> letters_;
  SpaceConfig config_;
  std::vector<std::vector<std::size_t>> maps_;
};

/// One domain map of a ModelSpace. Owns a model whose valuation and equality
/// are rewritten in place by load_valuation/load_equality; the model's
/// address is stable for the lifetime of the block, so an Evaluator may be
/// compiled against it once.
class ModelSpace::Block {
 public:
  Model& model() noexcept { return *model_; }
  const Model& model() const noexcept { return *model_; }

  /// Throws Error when the valuation needs more than 62 bits.
  std::uint64_t valuation_count() const;
  std::uint64_t equality_count() const noexcept { return equality_count_; }
  /// valuation_count() * equality_count(), saturating.
  std::uint64_t size() const;
  std::size_t valuation_bits() const noexcept { return bits_.size(); }

  /// False when the valuation breaks intuitionistic heredity.
  bool load_valuation(std::uint64_t code);
  /// False when the partitions break congruence with the loaded valuation or
  /// the configured principle.
  bool load_equality(std::uint64_t code);

 private:
  friend class ModelSpace;
  Block() = default;

  struct Bit {
    std::uint32_t letter;
    World world;
    std::size_t code;
  };

  std::unique_ptr<Model> model_;
  std::optional<EqPrinciple> principle_;
  std::vector<Bit> bits_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hereditary_;  // bit i implies bit j
  std::vector<const std::vector<std::vector<Individual>>*> partitions_;  // per world
  std::vector<std::size_t> sizes_;
  std::uint64_t equality_count_ = 1;
};

/// Representative arrays of every partition of {0..n-1}, restricted growth
/// order. Cached for n <= 8.
const std::vector<std::vector<Individual>>& partitions_of(std::size_t n);

}  // namespace monotrick
