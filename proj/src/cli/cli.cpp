#include "monotrick/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "monotrick/error.hpp"
#include "monotrick/eval.hpp"
#include "monotrick/experiment.hpp"
#include "monotrick/io.hpp"
#include "monotrick/search.hpp"
#include "monotrick/separation.hpp"
#include "monotrick/syntax.hpp"
#include "monotrick/translate.hpp"

namespace monotrick::cli {

namespace {

struct Globals {
  bool json = false;
  std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();
  unsigned workers = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Formula formula_arg(const std::string& arg) {
  return parse(arg.starts_with('@') ? read_file(arg.substr(1)) : arg);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string describe_assignment(const Model& m, const Assignment& sigma) {
  std::string out;
  for (const auto& [var, a] : sigma) {
    out += out.empty() ? "" : ", ";
    out += var + " = " + m.individuals.at(a);
  }
  return out.empty() ? "(no free variables)" : out;
}

Model load_checked_model(const std::string& path) {
  Model m = load_model(path);
  const auto report = validate_model(m);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw FormatError("model fails validation: " + v.invariant + " " + v.witness);
  }
  return m;
}

Assignment parse_assign(const Model& m, const std::string& text) {
  Assignment sigma;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw FormatError("assignment item \"" + item + "\" lacks '='");
    const std::string var = item.substr(0, eq);
    const std::string name = item.substr(eq + 1);
    if (!is_variable_name(var)) throw FormatError("\"" + var + "\" is not a variable");
    auto a = m.find_individual(name);
    if (!a) throw FormatError("unknown individual \"" + name + "\"");
    sigma[var] = *a;
  }
  return sigma;
}

int verdict_exit(Outcome o) {
  switch (o) {
    case Outcome::valid:
    case Outcome::satisfiable: return affirmative;
    case Outcome::countermodel:
    case Outcome::unsatisfiable_up_to_bound: return negative;
    case Outcome::bound_exhausted: return exhausted;
  }
  return negative;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << to_string(v.outcome) << " (worlds <= " << v.world_bound << ", domain <= "
      << v.domain_bound << ")\n";
  for (const auto& w : v.warnings) out << "warning: " << w << '\n';
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "world " << w.model.frame.name(w.world) << ", "
        << describe_assignment(w.model, w.assignment) << '\n'
        << model_to_json(w.model).dump() << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kripke-trick translations, Kripke semantics and bounded model search"};
  app.name("monotrick");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("MONOTRICK_MAX_STEPS")) {
    try {
      g.max_steps = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: MONOTRICK_MAX_STEPS is not a number\n";
      return usage_error;
    }
  }
  app.add_flag("--json", g.json, "Print JSON");
  app.add_option("--max-steps", g.max_steps, "Stop enumeration after this many candidates");
  app.add_option("--workers", g.workers, "Search threads; 1 runs the serial reference");

  std::string formula;
  std::string model_path;
  std::string frame_path;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and pretty-print a formula");
  bool show_ast = false;
  parse_cmd->add_option("formula", formula, "Formula or @file")->required();
  parse_cmd->add_flag("--ast", show_ast, "Print the syntax tree");

  auto* classify_cmd = app.add_subcommand("classify", "Fragment report");
  classify_cmd->add_option("formula", formula, "Formula or @file")->required();

  auto* translate_cmd = app.add_subcommand("translate", "Apply a Kripke-trick variant");
  std::string variant_text = "d2";
  bool positivize_first = false;
  translate_cmd->add_option("formula", formula, "Formula or @file")->required();
  translate_cmd->add_option("--variant", variant_text, "d2, nd1, pi or ndj");
  translate_cmd->add_flag("--positivize", positivize_first, "Replace negation first");

  auto* validate_cmd = app.add_subcommand("validate", "Check model invariants");
  validate_cmd->add_option("--model", model_path, "Model file")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Truth at one world");
  std::string world_name;
  std::string assign_text;
  eval_cmd->add_option("formula", formula, "Formula or @file")->required();
  eval_cmd->add_option("--model", model_path, "Model file")->required();
  eval_cmd->add_option("--world", world_name, "World name")->required();
  eval_cmd->add_option("--assign", assign_text, "x=a,y=b");

  auto* check_cmd = app.add_subcommand("check", "Validity in a model");
  check_cmd->add_option("formula", formula, "Formula or @file")->required();
  check_cmd->add_option("--model", model_path, "Model file")->required();

  std::string mode_text = "modal";
  std::string class_text = "all";
  std::string eq_text = "eq3";
  std::size_t world_bound = 2;
  std::size_t domain_bound = 2;
  std::optional<std::size_t> decide_domain;
  bool constant = false;

  auto* sat_cmd = app.add_subcommand("sat", "Bounded satisfiability search");
  sat_cmd->add_option("formula", formula, "Formula or @file")->required();
  sat_cmd->add_option("--mode", mode_text, "modal or int");
  sat_cmd->add_option("--class", class_text, "Frame class, e.g. S4 or reflexive,alt_1");
  sat_cmd->add_option("--worlds", world_bound, "World bound");
  sat_cmd->add_option("--domain", domain_bound, "Domain bound");
  sat_cmd->add_option("--eq", eq_text, "eq1, eq2 or eq3");
  sat_cmd->add_flag("--constant", constant, "Constant domains");

  auto* decide_cmd = app.add_subcommand("decide", "Validity over a fixed frame");
  decide_cmd->add_option("formula", formula, "Formula or @file")->required();
  decide_cmd->add_option("--frame", frame_path, "Frame file")->required();
  decide_cmd->add_option("--domain", decide_domain, "Domain bound (default: heuristic)");
  decide_cmd->add_option("--eq", eq_text, "eq1, eq2 or eq3");
  decide_cmd->add_option("--mode", mode_text, "modal or int");
  decide_cmd->add_flag("--constant", constant, "Constant domains");

  auto* props_cmd = app.add_subcommand("frame-props", "Frame properties");
  props_cmd->add_option("--frame", frame_path, "Frame file")->required();

  auto* experiment_cmd = app.add_subcommand("experiment", "Translation faithfulness experiment");
  std::string corpus_path;
  std::size_t size_bound = 3;
  experiment_cmd->add_option("corpus", corpus_path, "Corpus file, one formula per line")->required();
  experiment_cmd->add_option("--variant", variant_text, "d2 or nd1");
  experiment_cmd->add_option("--size", size_bound, "Structure size bound");

  auto* separate_cmd = app.add_subcommand("eq-separate", "Search frames separating Eq1/Eq2/Eq3");
  std::size_t separate_worlds = 3;
  std::size_t separate_domain = 2;
  separate_cmd->add_option("--worlds", separate_worlds, "World bound");
  separate_cmd->add_option("--domain", separate_domain, "Domain bound");

  std::vector<const char*> args(argv, argv + argc);
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  SearchOptions options{g.workers, g.max_steps};
  auto need_mode = [&] {
    auto m = parse_mode(mode_text);
    if (!m) throw Error("unknown mode \"" + mode_text + "\"");
    return *m;
  };
  auto need_eq = [&] {
    auto p = parse_principle(eq_text);
    if (!p) throw Error("unknown equality principle \"" + eq_text + "\"");
    return *p;
  };
  auto need_variant = [&] {
    auto v = parse_variant(variant_text);
    if (!v) throw Error("unknown variant \"" + variant_text + "\"");
    return *v;
  };

  try {
    if (*parse_cmd) {
      const Formula f = formula_arg(formula);
      if (g.json) {
        out << Json{{"formula", render(f)}, {"ast", to_ast_string(f)}}.dump() << '\n';
      } else {
        out << (show_ast ? to_ast_string(f) : render(f)) << '\n';
      }
      return affirmative;
    }

    if (*classify_cmd) {
      const auto r = classify(formula_arg(formula));
      const Json j = fragment_to_json(r);
      if (g.json) {
        out << j.dump() << '\n';
      } else {
        for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
      }
      return affirmative;
    }

    if (*translate_cmd) {
      const Formula f = formula_arg(formula);
      const Variant v = need_variant();
      const auto names = NamingScheme::avoiding(f);
      const auto t = positivize_first ? positive_trick(f, v, names) : kripke_trick(f, v, names);
      if (g.json) {
        out << Json{{"formula", render(t.formula)}, {"warnings", t.warnings}}.dump() << '\n';
      } else {
        for (const auto& w : t.warnings) err << "warning: " << w << '\n';
        out << render(t.formula) << '\n';
      }
      return affirmative;
    }

    if (*validate_cmd) {
      const auto report = validate_model(load_model(model_path));
      if (g.json) {
        out << validation_to_json(report).dump() << '\n';
      } else if (report.ok()) {
        out << "ok\n";
      } else {
        for (const auto& v : report.violations) out << v.invariant << ": " << v.witness << '\n';
      }
      return report.ok() ? affirmative : negative;
    }

    if (*eval_cmd) {
      const Model m = load_checked_model(model_path);
      auto w = m.frame.find(world_name);
      if (!w) throw FormatError("unknown world \"" + world_name + "\"");
      const bool value = eval(m, *w, parse_assign(m, assign_text), formula_arg(formula));
      out << (g.json ? Json{{"value", value}}.dump() : bool_text(value)) << '\n';
      return value ? affirmative : negative;
    }

    if (*check_cmd) {
      const Model m = load_checked_model(model_path);
      const auto c = valid_in_model(m, formula_arg(formula));
      if (g.json) {
        out << model_check_to_json(m, c).dump() << '\n';
      } else if (c.valid) {
        out << "valid\n";
      } else {
        out << "invalid at " << m.frame.name(c.witness->world) << ": "
            << describe_assignment(m, c.witness->assignment) << '\n';
      }
      return c.valid ? affirmative : negative;
    }

    if (*sat_cmd || *decide_cmd) {
      const Formula f = formula_arg(formula);
      const Verdict v =
          *sat_cmd ? sat_bounded(f, FrameClass::parse(class_text), world_bound, domain_bound,
                                 need_mode(), need_eq(), constant, options)
                   : decide_valid_over_frame(load_frame(frame_path), f, decide_domain,
                                             need_mode(), need_eq(), constant, options);
      if (g.json) {
        out << verdict_to_json(v).dump() << '\n';
      } else {
        print_verdict(out, v);
      }
      return verdict_exit(v.outcome);
    }

    if (*props_cmd) {
      const Json j = properties_to_json(frame_properties(load_frame(frame_path)));
      if (g.json) {
        out << j.dump() << '\n';
      } else {
        for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
      }
      return affirmative;
    }

    if (*experiment_cmd) {
      const auto corpus = parse_corpus(read_file(corpus_path));
      const auto r = trick_experiment(corpus, need_variant(), size_bound);
      if (g.json) {
        out << experiment_to_json(r).dump() << '\n';
      } else {
        out << "variant " << to_string(r.variant) << ", size <= " << r.size_bound << ": "
            << r.corpus_size << " formulas x " << r.structure_count << " structures, "
            << r.agreements << " agreements, " << r.disagreements.size() << " disagreements\n";
        for (const auto& d : r.disagreements) {
          out << "disagreement: " << render(d.formula) << " on " << describe(d.structure)
              << ": classical " << bool_text(d.classical) << ", modal " << bool_text(d.modal)
              << '\n';
        }
        for (const auto& s : r.skipped) out << "skipped: " << render(s.formula) << ": " << s.reason << '\n';
        out << "wall time " << static_cast<long long>(r.wall_time_ms) << " ms\n";
      }
      return r.disagreements.empty() ? affirmative : negative;
    }

    if (*separate_cmd) {
      const auto r = find_eq_separations(default_separation_candidates(), separate_worlds,
                                         separate_domain, options);
      if (g.json) {
        out << separation_to_json(r).dump() << '\n';
      } else {
        auto line = [&](const char* label, const std::optional<Separation>& s) {
          out << label << ": ";
          if (!s) {
            out << "not found within bounds (worlds <= " << r.world_bound << ", domain <= "
                << r.domain_bound << ")\n";
            return;
          }
          out << render(s->formula) << " [" << to_string(s->mode) << "] on "
              << frame_to_json(s->frame).dump() << '\n';
        };
        line("eq3 over eq2", r.eq3_over_eq2);
        line("eq2 over eq1", r.eq2_over_eq1);
        out << r.frames_searched << " frames, " << r.candidates << " candidates\n";
      }
      return r.eq3_over_eq2 && r.eq2_over_eq1 ? affirmative : negative;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace monotrick::cli
