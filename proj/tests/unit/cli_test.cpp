#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "monotrick/cli.hpp"
#include "monotrick/io.hpp"

using namespace monotrick;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "monotrick");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "monotrick_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

const char* kChain = R"({
  "mode": "int", "worlds": ["w", "v"],
  "access": [["w","w"], ["w","v"], ["v","v"]],
  "domains": {"w": ["a","b"], "v": ["a","b"]},
  "valuation": {"v": {"Q": [["a"],["b"]]}},
  "equality": {"principle": "eq1", "classes": {"v": [["a","b"]]}}
})";

}  // namespace

TEST_CASE("cli parse and classify") {
  auto r = run({"parse", "forall x (P(x,y) -> ((<>(x = y))))"});
  CHECK(r.code == 0);
  CHECK(r.out == "forall x (P(x,y) -> <>(x = y))\n");

  r = run({"--json", "classify", "forall x <>Q(x)"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["is_monadic"] == true);
  CHECK(j["modal_depth"] == 1);

  r = run({"parse", "P(x"});
  CHECK(r.code == 2);
  CHECK(r.err.starts_with("error: "));

  const auto file = scratch("f.txt", "# comment\np & q\n");
  r = run({"parse", "@" + file.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "p & q\n");
  CHECK(run({"parse", "@/no/such/file"}).code == 2);
}

TEST_CASE("cli translate") {
  auto r = run({"translate", "--variant", "d2", "forall x exists y P(x,y)"});
  CHECK(r.code == 0);
  CHECK(r.out == "forall x exists y <>(Q1(x) & Q2(y))\n");
  r = run({"translate", "--variant", "d2", "P(x,y) & Q1"});
  CHECK(r.out == "<>(Q1_1(x) & Q2(y)) & Q1\n");
  CHECK(run({"translate", "--variant", "zz", "P(x,y)"}).code == 2);
  CHECK(run({"translate", "--variant", "d2", "[]P(x,y)"}).code == 2);
}

TEST_CASE("cli validate, eval and check") {
  const auto good = scratch("chain.json", kChain);
  CHECK(run({"validate", "--model", good.string()}).out == "ok\n");
  const auto bad = scratch("bad.json", R"({"worlds": ["w","v"], "access": [["w","v"]],
    "domains": {"w": ["a","b"], "v": ["a"]}})");
  auto r = run({"validate", "--model", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("expanding domains") != std::string::npos);

  CHECK(run({"eval", "~~Q(x)", "--model", good.string(), "--world", "w", "--assign", "x=a"}).code == 0);
  CHECK(run({"eval", "Q(x)", "--model", good.string(), "--world", "w", "--assign", "x=a"}).code == 1);
  CHECK(run({"eval", "Q(x)", "--model", good.string(), "--world", "z", "--assign", "x=a"}).code == 2);
  CHECK(run({"eval", "Q(x)", "--model", good.string(), "--world", "w"}).code == 2);
  CHECK(run({"eval", "Q(x)", "--model", bad.string(), "--world", "w", "--assign", "x=a"}).code == 2);

  r = run({"check", "x = y | ~(x = y)", "--model", good.string()});
  CHECK(r.code == 1);
  CHECK(r.out == "invalid at w: x = a, y = b\n");
  r = run({"--json", "check", "Q(x) -> Q(x)", "--model", good.string()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["valid"] == true);
}

TEST_CASE("cli sat and decide") {
  auto r = run({"--json", "sat", "exists x exists y <>(Q1(x) & Q2(y))"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["outcome"] == "satisfiable");
  const Model witness = model_from_json(j["witness"]["model"]);
  CHECK(witness.frame.size() == 1);
  CHECK(witness.frame.sees(0, 0));

  CHECK(run({"sat", "<>true", "--class", "alt_0"}).code == 1);
  CHECK(run({"sat", "p", "--class", "nonsense"}).code == 2);
  CHECK(run({"sat", "p", "--eq", "eq9"}).code == 2);
  CHECK(run({"--max-steps", "1", "sat", "exists x exists y ~(x = y)"}).code == 3);

  const auto point = scratch("point.json", R"({"worlds": ["w"], "access": [["w","w"]]})");
  r = run({"decide", "Q(x) -> Q(x)", "--frame", point.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("warning: domain bound 4 is a heuristic default") != std::string::npos);
  CHECK(run({"decide", "Q(x)", "--frame", point.string(), "--domain", "1"}).code == 1);
  const auto chain = scratch("chain_frame.json",
                             R"({"worlds": ["w","v"], "access": [["w","w"],["w","v"],["v","v"]]})");
  CHECK(run({"decide", "x = y | ~(x = y)", "--frame", chain.string(), "--domain", "2",
             "--mode", "int", "--eq", "eq1"}).code == 1);
  CHECK(run({"decide", "x = y | ~(x = y)", "--frame", chain.string(), "--domain", "2",
             "--mode", "int", "--eq", "eq2"}).code == 0);
  const auto line = scratch("line.json", R"({"worlds": ["w","v"], "access": [["w","v"]]})");
  CHECK(run({"decide", "p", "--frame", line.string(), "--mode", "int"}).code == 2);
}

TEST_CASE("cli workers give identical output") {
  const auto a = run({"--workers", "1", "--json", "sat", "exists x (Q(x) & <>~Q(x))", "--domain", "2"});
  const auto b = run({"--workers", "3", "--json", "sat", "exists x (Q(x) & <>~Q(x))", "--domain", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli step cap from the environment") {
  ::setenv("MONOTRICK_MAX_STEPS", "1", 1);
  const auto capped = run({"sat", "exists x exists y ~(x = y)"});
  ::setenv("MONOTRICK_MAX_STEPS", "many", 1);
  const auto garbage = run({"sat", "p"});
  ::unsetenv("MONOTRICK_MAX_STEPS");
  CHECK(capped.code == 3);
  CHECK(capped.out.starts_with("bound_exhausted"));
  CHECK(garbage.code == 2);
  CHECK(run({"sat", "exists x exists y ~(x = y)"}).code == 0);
}

TEST_CASE("cli frame-props, experiment and eq-separate") {
  const auto chain = scratch("chain_frame2.json",
                             R"({"worlds": ["w","v"], "access": [["w","w"],["w","v"],["v","v"]]})");
  auto r = run({"--json", "frame-props", "--frame", chain.string()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["partial_order"] == true);

  const auto corpus = scratch("corpus.txt", "forall x exists y P(x,y)\nexists x P(x,x)\n");
  r = run({"experiment", corpus.string(), "--variant", "d2", "--size", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("variant d2, size <= 2: 2 formulas x 18 structures, 36 agreements, 0 disagreements"));
  CHECK(run({"experiment", corpus.string(), "--variant", "pi"}).code == 2);

  r = run({"eq-separate", "--worlds", "2", "--domain", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("eq3 over eq2: not found within bounds") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"sat"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
