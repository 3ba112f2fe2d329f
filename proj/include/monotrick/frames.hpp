#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "monotrick/model.hpp"

namespace monotrick {

enum class FrameProperty {
  reflexive,
  transitive,
  symmetric,
  serial,
  euclidean,
  linear,                  // any two distinct worlds are related one way or the other
  partial_order,           // reflexive, transitive, antisymmetric
  irreflexive_transitive,  // strict order; on finite frames the GL condition
};

std::string_view to_string(FrameProperty p) noexcept;
std::optional<FrameProperty> parse_property(std::string_view text) noexcept;

/// A set of required frame properties, optionally with an out-degree bound
/// (Alt_n: every world sees at most n worlds). Empty means all frames.
struct FrameClass {
  std::set<FrameProperty> required;
  std::optional<std::size_t> alt_n;

  /// Either a comma-separated list of properties (`reflexive,transitive`,
  /// `alt_2`) or a logic name, with or without the leading Q: K, T, K4, K5,
  /// K45, KD, KD4, KD45, KB, KTB, S4, S5, GL, Grz, Int, AltN. `all` and the
  /// empty string give the class of all frames. Throws Error otherwise.
  static FrameClass parse(std::string_view text);

  FrameClass with(FrameProperty p) const;
  std::string to_string() const;

  friend bool operator==(const FrameClass&, const FrameClass&) = default;
};

struct PropertyReport {
  bool reflexive = false;
  bool transitive = false;
  bool symmetric = false;
  bool serial = false;
  bool euclidean = false;
  bool linear = false;
  bool partial_order = false;
  bool irreflexive_transitive = false;
  /// Least n for which the frame is Alt_n.
  std::size_t max_out_degree = 0;

  bool has(FrameProperty p) const noexcept;
  bool satisfies(const FrameClass& cls) const noexcept;
};

PropertyReport frame_properties(const Frame& fr);

/// The frame on w0..w{k-1} whose edge (i,j) is bit i*k+j of code.
Frame frame_from_code(std::size_t worlds, std::uint64_t code);

/// Frames on 1..world_bound canonical worlds that belong to cls, ordered by
/// world count and then by edge code. The visitor returns false to stop.
/// world_bound is capped at 7.
void for_each_frame(std::size_t world_bound, const FrameClass& cls,
                    const std::function<bool(const Frame&)>& visit);

std::vector<Frame> enumerate_frames(std::size_t world_bound, const FrameClass& cls);

}  // namespace monotrick
