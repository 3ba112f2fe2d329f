#include <fstream>
#include <set>
#include <sstream>

#include "monotrick/error.hpp"
#include "monotrick/io.hpp"

namespace monotrick {

namespace {

void only_keys(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : allowed) known = known || key == k;
    if (!known) throw FormatError("unknown key \"" + key + "\" in " + std::string(what));
  }
}

const Json& expect(const Json& j, bool ok, std::string_view what) {
  if (!ok) throw FormatError(std::string(what) + " has the wrong JSON type");
  return j;
}

std::string text(const Json& j, std::string_view what) {
  expect(j, j.is_string(), what);
  return j.get<std::string>();
}

World world_named(const Frame& fr, const std::string& name) {
  if (auto w = fr.find(name)) return *w;
  throw FormatError("unknown world \"" + name + "\"");
}

std::vector<Individual> individuals_named(const Model& m, const Json& names, std::string_view what) {
  expect(names, names.is_array(), what);
  std::vector<Individual> out;
  for (const auto& n : names) {
    const std::string name = text(n, what);
    auto a = m.find_individual(name);
    if (!a) throw FormatError("unknown individual \"" + name + "\" in " + std::string(what));
    out.push_back(*a);
  }
  return out;
}

Json names_of(const Model& m, const std::vector<Individual>& xs) {
  Json out = Json::array();
  for (Individual a : xs) out.push_back(m.individuals.at(a));
  return out;
}

}  // namespace

Json frame_to_json(const Frame& fr) {
  Json j;
  j["worlds"] = fr.names();
  Json access = Json::array();
  for (auto [w, v] : fr.edges()) access.push_back({fr.name(w), fr.name(v)});
  j["access"] = std::move(access);
  return j;
}

namespace {

Frame read_frame(const Json& j) {
  if (!j.contains("worlds")) throw FormatError("missing key \"worlds\"");
  const Json& worlds = expect(j["worlds"], j["worlds"].is_array(), "worlds");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : worlds) {
    names.push_back(text(n, "worlds"));
    if (!seen.insert(names.back()).second) throw FormatError("duplicate world \"" + names.back() + "\"");
  }
  if (names.empty()) throw FormatError("a frame needs at least one world");
  Frame fr(std::move(names));
  if (j.contains("access")) {
    const Json& access = expect(j["access"], j["access"].is_array(), "access");
    for (const auto& edge : access) {
      expect(edge, edge.is_array() && edge.size() == 2, "access pair");
      fr.connect(world_named(fr, text(edge[0], "access")), world_named(fr, text(edge[1], "access")));
    }
  }
  return fr;
}

}  // namespace

Frame frame_from_json(const Json& j) {
  only_keys(j, {"worlds", "access"}, "frame");
  return read_frame(j);
}

Json model_to_json(const Model& m) {
  const Frame& fr = m.frame;
  Json j;
  j["mode"] = to_string(m.mode);
  j["constant_domains"] = m.domains.constant_domains();
  const Json frame = frame_to_json(fr);
  j["worlds"] = frame["worlds"];
  j["access"] = frame["access"];

  Json domains = Json::object();
  for (World w = 0; w < fr.size(); ++w) domains[fr.name(w)] = names_of(m, m.domains.members(w));
  j["domains"] = std::move(domains);

  Json valuation = Json::object();
  const auto& val = m.valuation;
  for (World w = 0; w < fr.size(); ++w) {
    Json letters = Json::object();
    for (std::size_t l = 0; l < val.letter_count(); ++l) {
      Json tuples = Json::array();
      for (const auto& t : val.tuples(w, l)) tuples.push_back(names_of(m, t));
      letters[val.letter(l)] = std::move(tuples);
    }
    valuation[fr.name(w)] = std::move(letters);
  }
  j["valuation"] = std::move(valuation);

  Json classes = Json::object();
  for (World w = 0; w < fr.size(); ++w) {
    Json cls = Json::array();
    for (const auto& c : m.equality.classes(w)) cls.push_back(names_of(m, c));
    classes[fr.name(w)] = std::move(cls);
  }
  j["equality"] = {{"principle", to_string(m.equality.principle())}, {"classes", std::move(classes)}};
  return j;
}

Model model_from_json(const Json& j) {
  only_keys(j, {"mode", "constant_domains", "worlds", "access", "domains", "valuation", "equality"},
            "model");
  Frame fr = read_frame(j);

  Mode mode = Mode::modal;
  if (j.contains("mode")) {
    auto parsed = parse_mode(text(j["mode"], "mode"));
    if (!parsed) throw FormatError("mode must be \"modal\" or \"int\"");
    mode = *parsed;
  }
  bool constant = false;
  if (j.contains("constant_domains")) {
    constant = expect(j["constant_domains"], j["constant_domains"].is_boolean(), "constant_domains")
                   .get<bool>();
  }
  EqPrinciple principle = EqPrinciple::eq3;
  const Json* eq = nullptr;
  if (j.contains("equality")) {
    eq = &j["equality"];
    only_keys(*eq, {"principle", "classes"}, "equality");
    if (eq->contains("principle")) {
      auto parsed = parse_principle(text((*eq)["principle"], "principle"));
      if (!parsed) throw FormatError("principle must be eq1, eq2 or eq3");
      principle = *parsed;
    }
  }

  // individuals in order of first appearance
  std::vector<std::string> pool;
  std::set<std::string> seen;
  const Json* domains = nullptr;
  if (j.contains("domains")) {
    domains = &expect(j["domains"], j["domains"].is_object(), "domains");
    for (const auto& [world, members] : domains->items()) world_named(fr, world);
    for (const auto& name : fr.names()) {
      if (!domains->contains(name)) continue;
      const Json& members = expect((*domains)[name], (*domains)[name].is_array(), "domain");
      for (const auto& a : members) {
        std::string s = text(a, "domain");
        if (seen.insert(s).second) pool.push_back(std::move(s));
      }
    }
  }

  Model m = make_model(std::move(fr), std::move(pool), mode, principle, constant);
  if (domains) {
    for (const auto& [world, members] : domains->items()) {
      const World w = world_named(m.frame, world);
      for (Individual a : individuals_named(m, members, "domain")) m.domains.add(w, a);
    }
  }

  if (j.contains("valuation")) {
    const Json& valuation = expect(j["valuation"], j["valuation"].is_object(), "valuation");
    for (const auto& [world, letters] : valuation.items()) {
      const World w = world_named(m.frame, world);
      expect(letters, letters.is_object(), "valuation entry");
      for (const auto& [letter, tuples] : letters.items()) {
        if (!is_letter_name(letter)) throw FormatError("\"" + letter + "\" is not a letter name");
        expect(tuples, tuples.is_array(), "valuation tuples");
        const std::size_t l = m.valuation.declare(letter, -1);
        for (const auto& t : tuples) {
          const auto tuple = individuals_named(m, t, "valuation tuple");
          try {
            m.valuation.set(w, l, tuple);
          } catch (const ArityError& e) {
            throw FormatError(e.what());
          }
        }
      }
    }
  }

  m.equality.reset_identity(m.domains);
  if (eq && eq->contains("classes")) {
    const Json& classes = expect((*eq)["classes"], (*eq)["classes"].is_object(), "classes");
    for (const auto& [world, list] : classes.items()) {
      const World w = world_named(m.frame, world);
      expect(list, list.is_array(), "classes");
      for (Individual a = 0; a < m.individuals.size(); ++a) {
        m.equality.set_representative(w, a, kNoIndividual);
      }
      for (const auto& cls : list) m.equality.set_class(w, individuals_named(m, cls, "class"));
    }
  }
  return m;
}

Json assignment_to_json(const Model& m, const Assignment& sigma) {
  Json j = Json::object();
  for (const auto& [var, a] : sigma) j[var] = m.individuals.at(a);
  return j;
}

Assignment assignment_from_json(const Model& m, const Json& j) {
  expect(j, j.is_object(), "assignment");
  Assignment sigma;
  for (const auto& [var, name] : j.items()) {
    if (!is_variable_name(var)) throw FormatError("\"" + var + "\" is not a variable");
    const std::string s = text(name, "assignment");
    auto a = m.find_individual(s);
    if (!a) throw FormatError("unknown individual \"" + s + "\" in assignment");
    sigma[var] = *a;
  }
  return sigma;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  j["bounds_used"] = {{"worlds", v.world_bound}, {"domain", v.domain_bound}};
  j["warnings"] = v.warnings;
  if (v.witness) {
    const Witness& w = *v.witness;
    j["witness"] = {{"model", model_to_json(w.model)},
                    {"world", w.model.frame.name(w.world)},
                    {"assignment", assignment_to_json(w.model, w.assignment)}};
  }
  return j;
}

Verdict verdict_from_json(const Json& j) {
  only_keys(j, {"outcome", "bounds_used", "warnings", "witness"}, "verdict");
  Verdict v;
  if (!j.contains("outcome")) throw FormatError("missing key \"outcome\"");
  auto outcome = parse_outcome(text(j["outcome"], "outcome"));
  if (!outcome) throw FormatError("unknown outcome");
  v.outcome = *outcome;
  if (j.contains("bounds_used")) {
    const Json& b = j["bounds_used"];
    only_keys(b, {"worlds", "domain"}, "bounds_used");
    if (b.contains("worlds")) v.world_bound = expect(b["worlds"], b["worlds"].is_number_unsigned(), "worlds").get<std::size_t>();
    if (b.contains("domain")) v.domain_bound = expect(b["domain"], b["domain"].is_number_unsigned(), "domain").get<std::size_t>();
  }
  if (j.contains("warnings")) {
    for (const auto& w : expect(j["warnings"], j["warnings"].is_array(), "warnings")) {
      v.warnings.push_back(text(w, "warning"));
    }
  }
  if (j.contains("witness")) {
    const Json& w = j["witness"];
    only_keys(w, {"model", "world", "assignment"}, "witness");
    if (!w.contains("model") || !w.contains("world")) throw FormatError("incomplete witness");
    Witness out{model_from_json(w["model"]), 0, {}};
    out.world = world_named(out.model.frame, text(w["world"], "world"));
    if (w.contains("assignment")) out.assignment = assignment_from_json(out.model, w["assignment"]);
    v.witness = std::move(out);
  }
  return v;
}

Json structure_to_json(const ClassicalStructure& s) {
  Json j;
  j["size"] = s.size;
  Json rel = Json::array();
  for (auto [a, b] : s.relation) rel.push_back({a, b});
  j[s.binary_letter] = std::move(rel);
  for (const auto& [name, ext] : s.unary) j[name] = ext;
  for (const auto& [name, value] : s.propositions) j[name] = value;
  return j;
}

Json fragment_to_json(const FragmentReport& r) {
  return {{"is_monadic", r.is_monadic},       {"is_monodic", r.is_monodic},
          {"is_positive", r.is_positive},     {"has_equality", r.has_equality},
          {"variable_count", r.variable_count}, {"modal_depth", r.modal_depth},
          {"max_letter_arity", r.max_letter_arity}};
}

Json properties_to_json(const PropertyReport& r) {
  return {{"reflexive", r.reflexive},
          {"transitive", r.transitive},
          {"symmetric", r.symmetric},
          {"serial", r.serial},
          {"euclidean", r.euclidean},
          {"linear", r.linear},
          {"partial_order", r.partial_order},
          {"irreflexive_transitive", r.irreflexive_transitive},
          {"max_out_degree", r.max_out_degree}};
}

Json validation_to_json(const ValidationReport& r) {
  Json list = Json::array();
  for (const auto& v : r.violations) list.push_back({{"invariant", v.invariant}, {"witness", v.witness}});
  return {{"ok", r.ok()}, {"violations", std::move(list)}};
}

Json model_check_to_json(const Model& m, const ModelCheck& c) {
  Json j;
  j["valid"] = c.valid;
  if (c.witness) {
    j["witness"] = {{"world", m.frame.name(c.witness->world)},
                    {"assignment", assignment_to_json(m, c.witness->assignment)}};
  }
  return j;
}

Json experiment_to_json(const ExperimentReport& r) {
  Json j;
  j["variant"] = to_string(r.variant);
  j["size_bound"] = r.size_bound;
  j["corpus_size"] = r.corpus_size;
  j["structure_count"] = r.structure_count;
  j["agreements"] = r.agreements;
  Json dis = Json::array();
  for (const auto& d : r.disagreements) {
    dis.push_back({{"formula", render(d.formula)},
                   {"structure", structure_to_json(d.structure)},
                   {"classical", d.classical},
                   {"modal", d.modal}});
  }
  j["disagreements"] = std::move(dis);
  Json skipped = Json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"formula", render(s.formula)}, {"reason", s.reason}});
  j["skipped"] = std::move(skipped);
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json separation_to_json(const SeparationReport& r) {
  auto one = [](const std::optional<Separation>& s) -> Json {
    if (!s) return {{"found", false}, {"note", "not found within bounds"}};
    return {{"found", true},
            {"stronger", to_string(s->stronger)},
            {"weaker", to_string(s->weaker)},
            {"mode", to_string(s->mode)},
            {"formula", render(s->formula)},
            {"frame", frame_to_json(s->frame)},
            {"refutation", verdict_to_json(s->refutation)}};
  };
  return {{"eq3_over_eq2", one(r.eq3_over_eq2)},
          {"eq2_over_eq1", one(r.eq2_over_eq1)},
          {"world_bound", r.world_bound},
          {"domain_bound", r.domain_bound},
          {"frames_searched", r.frames_searched},
          {"candidates", r.candidates}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Model load_model(const std::filesystem::path& path) {
  try {
    return model_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Frame load_frame(const std::filesystem::path& path) {
  try {
    return frame_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace monotrick
