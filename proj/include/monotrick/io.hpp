#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "monotrick/classical.hpp"
#include "monotrick/eval.hpp"
#include "monotrick/experiment.hpp"
#include "monotrick/frames.hpp"
#include "monotrick/model.hpp"
#include "monotrick/search.hpp"
#include "monotrick/separation.hpp"
#include "monotrick/syntax.hpp"

namespace monotrick {

using Json = nlohmann::ordered_json;

/// Model files:
///
///   { "mode": "modal" | "int", "constant_domains": bool,
///     "worlds": [names], "access": [[from, to], ...],
///     "domains": { world: [individuals] },
///     "valuation": { world: { letter: [[individuals], ...] } },
///     "equality": { "principle": "eq1" | "eq2" | "eq3",
///                   "classes": { world: [[individuals], ...] } } }
///
/// Only `worlds` is required. Individuals are the names listed in `domains`,
/// numbered in order of first appearance. A world without listed classes
/// gets the identity partition. Unknown keys and dangling names raise
/// FormatError.
Json model_to_json(const Model& m);
Model model_from_json(const Json& j);

/// The `worlds`/`access` part of a model file.
Json frame_to_json(const Frame& fr);
Frame frame_from_json(const Json& j);

Json assignment_to_json(const Model& m, const Assignment& sigma);
Assignment assignment_from_json(const Model& m, const Json& j);

/// { "outcome", "bounds_used": {"worlds", "domain"}, "warnings",
///   "witness": {"model", "world", "assignment"} }
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json structure_to_json(const ClassicalStructure& s);
Json fragment_to_json(const FragmentReport& r);
Json properties_to_json(const PropertyReport& r);
Json validation_to_json(const ValidationReport& r);
Json model_check_to_json(const Model& m, const ModelCheck& c);
Json experiment_to_json(const ExperimentReport& r);
Json separation_to_json(const SeparationReport& r);

/// Reads and parses a JSON file. Throws FormatError.
Json read_json_file(const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);
Frame load_frame(const std::filesystem::path& path);

}  // namespace monotrick
