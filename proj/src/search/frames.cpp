#include "monotrick/frames.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "monotrick/error.hpp"

namespace monotrick {

namespace {

constexpr std::pair<FrameProperty, std::string_view> kPropertyNames[] = {
    {FrameProperty::reflexive, "reflexive"},
    {FrameProperty::transitive, "transitive"},
    {FrameProperty::symmetric, "symmetric"},
    {FrameProperty::serial, "serial"},
    {FrameProperty::euclidean, "euclidean"},
    {FrameProperty::linear, "linear"},
    {FrameProperty::partial_order, "partial_order"},
    {FrameProperty::irreflexive_transitive, "irreflexive_transitive"},
};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::optional<std::size_t> parse_count(std::string_view digits) {
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  std::size_t n = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

std::optional<FrameClass> logic_class(std::string_view text) {
  using P = FrameProperty;
  std::string name = upper(text);
  if (name.size() > 1 && name.front() == 'Q') name.erase(0, 1);
  static const std::map<std::string, std::set<P>> logics = {
      {"K", {}},
      {"T", {P::reflexive}},
      {"K4", {P::transitive}},
      {"K5", {P::euclidean}},
      {"K45", {P::transitive, P::euclidean}},
      {"KD", {P::serial}},
      {"KD4", {P::serial, P::transitive}},
      {"KD45", {P::serial, P::transitive, P::euclidean}},
      {"KB", {P::symmetric}},
      {"KTB", {P::reflexive, P::symmetric}},
      {"S4", {P::reflexive, P::transitive}},
      {"S5", {P::reflexive, P::symmetric, P::transitive}},
      {"GL", {P::irreflexive_transitive}},
      {"GRZ", {P::partial_order}},
      {"INT", {P::reflexive, P::transitive}},
  };
  if (auto it = logics.find(name); it != logics.end()) return FrameClass{it->second, std::nullopt};
  if (name.rfind("ALT", 0) == 0) {
    if (auto n = parse_count(std::string_view(name).substr(3))) return FrameClass{{}, *n};
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(FrameProperty p) noexcept {
  for (const auto& [prop, name] : kPropertyNames) {
    if (prop == p) return name;
  }
  return "?";
}

std::optional<FrameProperty> parse_property(std::string_view text) noexcept {
  for (const auto& [prop, name] : kPropertyNames) {
    if (name == text) return prop;
  }
  return std::nullopt;
}

FrameClass FrameClass::parse(std::string_view text) {
  const std::string whole = trim(text);
  if (whole.empty() || whole == "all") return {};
  if (auto cls = logic_class(whole)) return *cls;

  FrameClass cls;
  std::string_view rest = whole;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (auto p = parse_property(item)) {
      cls.required.insert(*p);
    } else if (item.rfind("alt_", 0) == 0 && parse_count(std::string_view(item).substr(4))) {
      const std::size_t n = *parse_count(std::string_view(item).substr(4));
      cls.alt_n = cls.alt_n ? std::min(*cls.alt_n, n) : n;
    } else {
      throw Error("unknown frame class or property '" + item + "'");
    }
  }
  return cls;
}

FrameClass FrameClass::with(FrameProperty p) const {
  FrameClass out = *this;
  out.required.insert(p);
  return out;
}

std::string FrameClass::to_string() const {
  std::string out;
  for (FrameProperty p : required) {
    if (!out.empty()) out += ',';
    out += monotrick::to_string(p);
  }
  if (alt_n) {
    if (!out.empty()) out += ',';
    out += "alt_" + std::to_string(*alt_n);
  }
  return out.empty() ? "all" : out;
}

bool PropertyReport::has(FrameProperty p) const noexcept {
  switch (p) {
    case FrameProperty::reflexive: return reflexive;
    case FrameProperty::transitive: return transitive;
    case FrameProperty::symmetric: return symmetric;
    case FrameProperty::serial: return serial;
    case FrameProperty::euclidean: return euclidean;
    case FrameProperty::linear: return linear;
    case FrameProperty::partial_order: return partial_order;
    case FrameProperty::irreflexive_transitive: return irreflexive_transitive;
  }
  return false;
}

bool PropertyReport::satisfies(const FrameClass& cls) const noexcept {
  if (cls.alt_n && max_out_degree > *cls.alt_n) return false;
  return std::all_of(cls.required.begin(), cls.required.end(),
                     [this](FrameProperty p) { return has(p); });
}

PropertyReport frame_properties(const Frame& fr) {
  const std::size_t n = fr.size();
  PropertyReport r;
  r.reflexive = r.transitive = r.symmetric = r.serial = r.euclidean = r.linear = true;
  bool irreflexive = true;
  bool antisymmetric = true;
  for (World w = 0; w < n; ++w) {
    r.max_out_degree = std::max(r.max_out_degree, fr.successors(w).size());
    if (fr.successors(w).empty()) r.serial = false;
    if (fr.sees(w, w)) {
      irreflexive = false;
    } else {
      r.reflexive = false;
    }
    for (World v = 0; v < n; ++v) {
      const bool wv = fr.sees(w, v);
      const bool vw = fr.sees(v, w);
      if (wv && !vw) r.symmetric = false;
      if (w != v && wv && vw) antisymmetric = false;
      if (w != v && !wv && !vw) r.linear = false;
      if (!wv) continue;
      for (World u = 0; u < n; ++u) {
        if (fr.sees(v, u) && !fr.sees(w, u)) r.transitive = false;
        if (fr.sees(w, u) && !fr.sees(v, u)) r.euclidean = false;
      }
    }
  }
  r.partial_order = r.reflexive && r.transitive && antisymmetric;
  r.irreflexive_transitive = irreflexive && r.transitive;
  return r;
}

Frame frame_from_code(std::size_t worlds, std::uint64_t code) {
  Frame fr = Frame::canonical(worlds);
  for (std::size_t i = 0; i < worlds; ++i) {
    for (std::size_t j = 0; j < worlds; ++j) {
      if ((code >> (i * worlds + j)) & 1U) fr.connect(static_cast<World>(i), static_cast<World>(j));
    }
  }
  return fr;
}

void for_each_frame(std::size_t world_bound, const FrameClass& cls,
                    const std::function<bool(const Frame&)>& visit) {
  if (world_bound > 7) throw Error("frame enumeration is limited to 7 worlds");
  for (std::size_t k = 1; k <= world_bound; ++k) {
    const std::uint64_t codes = std::uint64_t{1} << (k * k);
    for (std::uint64_t code = 0; code < codes; ++code) {
      Frame fr = frame_from_code(k, code);
      if (!frame_properties(fr).satisfies(cls)) continue;
      if (!visit(fr)) return;
    }
  }
}

std::vector<Frame> enumerate_frames(std::size_t world_bound, const FrameClass& cls) {
  std::vector<Frame> out;
  for_each_frame(world_bound, cls, [&out](const Frame& fr) {
    out.push_back(fr);
    return true;
  });
  return out;
}

}  // namespace monotrick
