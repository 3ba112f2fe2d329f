#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monotrick {

using World = std::uint32_t;
using Individual = std::uint32_t;

inline constexpr Individual kNoIndividual = static_cast<Individual>(-1);

enum class Mode { modal, intuitionistic };

/// How equality is read across worlds:
///   eq1  upward-hereditary congruence,
///   eq2  upward- and downward-hereditary congruence,
///   eq3  coincidence (identity on each domain).
enum class EqPrinciple { eq1, eq2, eq3 };

std::string_view to_string(Mode mode) noexcept;
std::string_view to_string(EqPrinciple principle) noexcept;
/// Accepts "modal", "int" and "intuitionistic".
std::optional<Mode> parse_mode(std::string_view text) noexcept;
/// Accepts "eq1", "eq2", "eq3" (case-insensitive).
std::optional<EqPrinciple> parse_principle(std::string_view text) noexcept;

class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<std::string> world_names);

  /// Worlds named w0, w1, ... with no edges.
  static Frame canonical(std::size_t worlds);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(World w) const { return names_.at(w); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<World> find(std::string_view name) const;

  void connect(World from, World to);
  bool sees(World from, World to) const noexcept { return matrix_[from * size() + to] != 0; }
  /// Ascending.
  const std::vector<World>& successors(World w) const { return successors_.at(w); }
  /// Row-major order.
  std::vector<std::pair<World, World>> edges() const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.names_ == b.names_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<World>> successors_;
};

class DomainMap {
 public:
  DomainMap() = default;
  DomainMap(std::size_t worlds, std::size_t pool, bool constant_domains = false);

  bool constant_domains() const noexcept { return constant_; }
  void set_constant_domains(bool value) noexcept { constant_ = value; }
  std::size_t pool_size() const noexcept { return pool_; }

  void add(World w, Individual a);
  /// Replaces D(w) with the first n individuals of the pool.
  void assign_prefix(World w, std::size_t n);
  bool contains(World w, Individual a) const noexcept { return bits_[w * pool_ + a] != 0; }
  /// Ascending.
  const std::vector<Individual>& members(World w) const { return members_.at(w); }

 private:
  std::size_t pool_ = 0;
  bool constant_ = false;
  std::vector<std::vector<Individual>> members_;
  std::vector<std::uint8_t> bits_;
};

/// Per-world extensions of predicate letters. A tuple (a0, ..., an-1) is
/// stored at code a0 + a1*N + ... with N the pool size.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::size_t worlds, std::size_t pool);

  /// Registers a letter and returns its index. A negative arity means the
  /// arity is not known yet; such a letter is empty everywhere until its first
  /// tuple is set. Throws ArityError on a conflicting redeclaration.
  std::size_t declare(const std::string& letter, int arity);
  std::optional<std::size_t> find(std::string_view letter) const;

  std::size_t letter_count() const noexcept { return tables_.size(); }
  const std::string& letter(std::size_t i) const { return tables_.at(i).name; }
  int arity(std::size_t i) const { return tables_.at(i).arity; }
  std::size_t code_count(std::size_t i) const { return tables_.at(i).codes; }

  std::size_t tuple_code(std::span<const Individual> tuple) const noexcept;
  bool holds(World w, std::size_t letter, std::span<const Individual> tuple) const;
  void set(World w, std::size_t letter, std::span<const Individual> tuple, bool value = true);

  bool holds_code(World w, std::size_t letter, std::size_t code) const noexcept {
    const auto& t = tables_[letter];
    return t.codes != 0 && t.truth[w * t.codes + code] != 0;
  }
  void set_code(World w, std::size_t letter, std::size_t code, bool value) noexcept {
    auto& t = tables_[letter];
    t.truth[w * t.codes + code] = value ? 1 : 0;
  }

  /// Tuples true at w, in code order.
  std::vector<std::vector<Individual>> tuples(World w, std::size_t letter) const;
  std::vector<Individual> decode(std::size_t letter, std::size_t code) const;

 private:
  struct Table {
    std::string name;
    int arity = -1;
    std::size_t codes = 0;
    std::vector<std::uint8_t> truth;
  };

  void allocate(Table& t, int arity);

  std::size_t worlds_ = 0;
  std::size_t pool_ = 0;
  std::vector<Table> tables_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Per-world partitions stored as representatives; the representative of a
/// class is its least member. Individuals outside every class map to
/// kNoIndividual.
class EqualityInterpretation {
 public:
  EqualityInterpretation() = default;
  EqualityInterpretation(std::size_t worlds, std::size_t pool,
                         EqPrinciple principle = EqPrinciple::eq3);

  EqPrinciple principle() const noexcept { return principle_; }
  void set_principle(EqPrinciple p) noexcept { principle_ = p; }

  /// Singleton classes over every D(w).
  void reset_identity(const DomainMap& domains);
  /// Adds one class at w. Throws FormatError when a member already belongs to
  /// another class at w.
  void set_class(World w, std::span<const Individual> members);
  void set_representative(World w, Individual a, Individual rep) noexcept {
    rep_[w * pool_ + a] = rep;
  }

  Individual representative(World w, Individual a) const noexcept { return rep_[w * pool_ + a]; }
  bool same(World w, Individual a, Individual b) const noexcept {
    const Individual ra = representative(w, a);
    return ra != kNoIndividual && ra == representative(w, b);
  }
  /// Classes at w ordered by representative; members ascending.
  std::vector<std::vector<Individual>> classes(World w) const;

 private:
  std::size_t pool_ = 0;
  EqPrinciple principle_ = EqPrinciple::eq3;
  std::vector<Individual> rep_;
};

struct Model {
  Frame frame;
  std::vector<std::string> individuals;
  DomainMap domains;
  Valuation valuation;
  EqualityInterpretation equality;
  Mode mode = Mode::modal;

  std::optional<Individual> find_individual(std::string_view name) const;
};

/// Builds an empty model shell: canonical sizes, identity equality, no letters.
Model make_model(Frame frame, std::vector<std::string> individuals, Mode mode,
                 EqPrinciple principle, bool constant_domains);

namespace invariant {
inline constexpr std::string_view nonempty_domain = "nonempty domain";
inline constexpr std::string_view expanding_domains = "expanding domains";
inline constexpr std::string_view constant_domains = "constant domains";
inline constexpr std::string_view valuation_in_domain = "valuation within domain";
inline constexpr std::string_view heredity = "intuitionistic heredity";
inline constexpr std::string_view preorder = "intuitionistic frame must be a preorder";
inline constexpr std::string_view partition = "equality classes partition the domain";
inline constexpr std::string_view congruence = "congruence";
inline constexpr std::string_view eq1_upward = "Eq1 upward heredity";
inline constexpr std::string_view eq2_downward = "Eq2 downward heredity";
inline constexpr std::string_view eq3_identity = "Eq3 identity";
}  // namespace invariant

struct Violation {
  std::string invariant;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Every invariant of the model's components, including the one selected by
/// the equality principle. Violations are data: nothing here throws.
ValidationReport validate_model(const Model& m);

/// The individual checks validate_model is assembled from. They do not look
/// at the declared principle.
std::vector<Violation> domain_violations(const Model& m);
std::vector<Violation> partition_violations(const Model& m);
std::vector<Violation> congruence_violations(const Model& m);
std::vector<Violation> upward_heredity_violations(const Model& m);
std::vector<Violation> downward_heredity_violations(const Model& m);

}  // namespace monotrick
