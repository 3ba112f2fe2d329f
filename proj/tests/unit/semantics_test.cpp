#include "doctest.h"
#include "monotrick/error.hpp"
#include "monotrick/eval.hpp"
#include "monotrick/io.hpp"
#include "monotrick/model_space.hpp"
#include "monotrick/syntax.hpp"
#include "oracle.hpp"

using namespace monotrick;

namespace {

Model model(const char* json) { return model_from_json(Json::parse(json)); }

// w -> v with loops; a and b everywhere, merged at v where Q holds of both.
const char* kChain = R"({
  "mode": "int", "worlds": ["w", "v"],
  "access": [["w","w"], ["w","v"], ["v","v"]],
  "domains": {"w": ["a","b"], "v": ["a","b"]},
  "valuation": {"v": {"Q": [["a"],["b"]]}},
  "equality": {"principle": "eq1", "classes": {"w": [["a"],["b"]], "v": [["a","b"]]}}
})";

bool has(const ValidationReport& r, std::string_view invariant) {
  for (const auto& v : r.violations) {
    if (v.invariant == invariant) return true;
  }
  return false;
}

std::vector<std::string> sorted_free(const Formula& f) {
  const auto s = free_variables(f);
  return {s.begin(), s.end()};
}

oracle::ModelShape random_shape(std::mt19937_64& rng, Mode mode) {
  oracle::ModelShape s;
  s.worlds = 1 + rng() % 3;
  s.pool = 1 + rng() % 3;
  s.mode = mode;
  s.principle = static_cast<EqPrinciple>(rng() % 3);
  s.constant = rng() % 4 == 0;
  s.letters = {{"Q", 1}, {"R", 1}, {"P", 2}, {"p", 0}};
  return s;
}

oracle::FormulaShape formula_shape(bool modal) {
  oracle::FormulaShape s;
  s.letters = {{"Q", 1}, {"R", 1}, {"P", 2}, {"p", 0}};
  s.modal = modal;
  return s;
}

}  // namespace

TEST_CASE("validate_model examples") {
  CHECK(validate_model(model(R"({"worlds": ["w"], "domains": {"w": ["a","b"]}})")).ok());

  const auto up = validate_model(model(R"({
    "worlds": ["w","v"], "access": [["w","v"]],
    "domains": {"w": ["a","b"], "v": ["a","b"]},
    "equality": {"principle": "eq1", "classes": {"w": [["a","b"]], "v": [["a"],["b"]]}}})"));
  REQUIRE(up.violations.size() == 1);
  CHECK(up.violations[0].invariant == "Eq1 upward heredity");
  CHECK(up.violations[0].witness == "(w,v,a,b)");

  const auto pre = validate_model(model(R"({"mode": "int", "worlds": ["w"], "domains": {"w": ["a"]}})"));
  CHECK(has(pre, "intuitionistic frame must be a preorder"));
}

TEST_CASE("validate_model reports every invariant") {
  CHECK(has(validate_model(model(R"({"worlds": ["w"]})")), invariant::nonempty_domain));
  CHECK(has(validate_model(model(R"({"worlds": ["w","v"], "access": [["w","v"]],
      "domains": {"w": ["a","b"], "v": ["a"]}})")), invariant::expanding_domains));
  CHECK(has(validate_model(model(R"({"worlds": ["w","v"], "constant_domains": true,
      "domains": {"w": ["a","b"], "v": ["a"]}})")), invariant::constant_domains));
  CHECK(has(validate_model(model(R"({"worlds": ["w","v"],
      "domains": {"w": ["a"], "v": ["a","b"]}, "valuation": {"w": {"Q": [["b"]]}}})")),
            invariant::valuation_in_domain));
  CHECK(has(validate_model(model(R"({"mode": "int", "worlds": ["w","v"],
      "access": [["w","w"],["w","v"],["v","v"]], "domains": {"w": ["a"], "v": ["a"]},
      "valuation": {"w": {"Q": [["a"]]}}})")), invariant::heredity));
  CHECK(has(validate_model(model(R"({"worlds": ["w"], "domains": {"w": ["a","b"]},
      "equality": {"principle": "eq1", "classes": {"w": [["a"]]}}})")), invariant::partition));
  CHECK(has(validate_model(model(R"({"worlds": ["w"], "domains": {"w": ["a","b"]},
      "valuation": {"w": {"Q": [["a"]]}},
      "equality": {"principle": "eq1", "classes": {"w": [["a","b"]]}}})")), invariant::congruence));
  CHECK(has(validate_model(model(R"({"worlds": ["w","v"], "access": [["w","v"]],
      "domains": {"w": ["a","b"], "v": ["a","b"]},
      "equality": {"principle": "eq2", "classes": {"w": [["a"],["b"]], "v": [["a","b"]]}}})")),
            invariant::eq2_downward));
  CHECK(has(validate_model(model(R"({"worlds": ["w"], "domains": {"w": ["a","b"]},
      "equality": {"principle": "eq3", "classes": {"w": [["a","b"]]}}})")), invariant::eq3_identity));
}

TEST_CASE("eval examples") {
  const Model chain = model(kChain);
  REQUIRE(validate_model(chain).ok());
  CHECK(eval(model(R"({"worlds": ["w"], "domains": {"w": ["a"]}})"), 0, {}, parse("[]true")));
  CHECK_FALSE(eval(chain, 0, {{"x", 0}}, parse("~Q(x)")));
  CHECK_FALSE(eval(chain, 0, {{"x", 0}}, parse("Q(x)")));
  CHECK(eval(chain, 1, {{"x", 0}}, parse("Q(x)")));
  CHECK_FALSE(eval(chain, 0, {{"x", 0}}, parse("Q(x) | ~Q(x)")));
  CHECK(eval(chain, 0, {{"x", 0}}, parse("~~Q(x)")));
  CHECK_FALSE(eval(chain, 0, {}, parse("forall x Q(x)")));
  CHECK(eval(chain, 0, {}, parse("exists x ~~Q(x)")));
}

TEST_CASE("eval errors") {
  const Model chain = model(kChain);
  CHECK_THROWS_AS(eval(chain, 0, {}, parse("[]p")), EvalError);
  CHECK_THROWS_AS(eval(chain, 0, {}, parse("Q(x)")), EvalError);
  CHECK_THROWS_AS(eval(chain, 7, {}, parse("true")), EvalError);
  const Model grow = model(R"({"worlds": ["w","v"], "access": [["w","v"]],
      "domains": {"w": ["a"], "v": ["a","b"]}})");
  CHECK_THROWS_AS(eval(grow, 0, {{"x", 1}}, parse("x = x")), EvalError);
  CHECK(eval(grow, 1, {{"x", 1}}, parse("x = x")));
  CHECK_THROWS_AS(eval(grow, 0, {}, parse("Q(x,y) & Q(x)")), ArityError);
}

TEST_CASE("valid_in_model examples") {
  const Model chain = model(kChain);
  CHECK(valid_in_model(chain, Formula::verum()).valid);

  const Model eq1 = model(R"({"worlds": ["w","v"], "access": [["w","v"]],
      "domains": {"w": ["a","b"], "v": ["a","b"]},
      "equality": {"principle": "eq1", "classes": {"w": [["a","b"]], "v": [["a","b"]]}}})");
  REQUIRE(validate_model(eq1).ok());
  CHECK(valid_in_model(eq1, parse("x = y -> [](x = y)")).valid);

  const auto lem = valid_in_model(chain, parse("x = y | ~(x = y)"));
  CHECK_FALSE(lem.valid);
  REQUIRE(lem.witness);
  CHECK(lem.witness->world == 0);
  CHECK(lem.witness->assignment == Assignment{{"x", 0}, {"y", 1}});
}

TEST_CASE("property: compiled evaluator agrees with the naive oracle") {
  std::mt19937_64 rng(41);
  for (Mode mode : {Mode::modal, Mode::intuitionistic}) {
    oracle::FormulaGen gen(formula_shape(mode == Mode::modal), 43);
    for (int i = 0; i < 300; ++i) {
      const Model m = oracle::random_model(random_shape(rng, mode), rng);
      REQUIRE(validate_model(m).ok());
      for (int j = 0; j < 10; ++j) {
        const Formula f = gen(4);
        const Evaluator ev(m, f);
        for (World w = 0; w < m.frame.size(); ++w) {
          for (const auto& sigma : oracle::assignments(m, w, ev.free_variables())) {
            INFO(render(f));
            CHECK(ev.holds(w, sigma) == oracle::naive_eval(m, w, sigma, f));
          }
        }
      }
    }
  }
}

TEST_CASE("property: intuitionistic heredity") {
  std::mt19937_64 rng(47);
  oracle::FormulaGen gen(formula_shape(false), 53);
  for (int i = 0; i < 300; ++i) {
    const Model m = oracle::random_model(random_shape(rng, Mode::intuitionistic), rng);
    for (int j = 0; j < 10; ++j) {
      const Formula f = gen(3);
      const Evaluator ev(m, f);
      for (auto [w, v] : m.frame.edges()) {
        for (const auto& sigma : oracle::assignments(m, w, ev.free_variables())) {
          if (ev.holds(w, sigma)) CHECK(ev.holds(v, sigma));
        }
      }
    }
  }
}

TEST_CASE("property: modal dualities") {
  std::mt19937_64 rng(59);
  oracle::FormulaGen gen(formula_shape(true), 61);
  for (int i = 0; i < 300; ++i) {
    const Model m = oracle::random_model(random_shape(rng, Mode::modal), rng);
    const Formula f = gen(3);
    const Formula dia = Formula::diamond(f);
    const Formula box = Formula::negation(Formula::box(Formula::negation(f)));
    const Formula ex = Formula::exists("x", f);
    const Formula all = Formula::negation(Formula::forall("x", Formula::negation(f)));
    for (World w = 0; w < m.frame.size(); ++w) {
      for (const auto& sigma : oracle::assignments(m, w, sorted_free(f))) {
        CHECK(eval(m, w, sigma, dia) == eval(m, w, sigma, box));
        CHECK(eval(m, w, sigma, ex) == eval(m, w, sigma, all));
      }
    }
  }
}

TEST_CASE("property: congruence indiscernibility") {
  std::mt19937_64 rng(67);
  oracle::FormulaShape shape = formula_shape(true);
  shape.equality = false;
  shape.variables = {"x", "y"};
  oracle::FormulaGen gen(shape, 71);
  int pairs = 0;
  for (int i = 0; i < 400; ++i) {
    auto ms = random_shape(rng, i % 2 ? Mode::modal : Mode::intuitionistic);
    ms.principle = i % 4 < 2 ? EqPrinciple::eq1 : EqPrinciple::eq2;
    ms.merge_probability = 0.5;
    const Model m = oracle::random_model(ms, rng);
    Formula f = gen(3);
    if (ms.mode == Mode::intuitionistic && modal_depth(f) > 0) continue;
    f = Formula::forall("y", f);  // leaves x as the only free variable
    for (World w = 0; w < m.frame.size(); ++w) {
      for (Individual a : m.domains.members(w)) {
        for (Individual b : m.domains.members(w)) {
          if (a == b || !m.equality.same(w, a, b)) continue;
          ++pairs;
          CHECK(eval(m, w, {{"x", a}}, f) == eval(m, w, {{"x", b}}, f));
        }
      }
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("equality correspondences on small exhaustive spaces") {
  const Formula eq1 = parse("x = y -> [](x = y)");
  const Formula lem = parse("x = y | ~(x = y)");
  const Formula eq2 = parse("x = y <-> [](x = y)");
  const std::vector<LetterSignature> q = {{"Q", 1}};
  std::size_t models = 0;
  for (const auto& fr : enumerate_frames(2, {})) {
    ModelSpace any(fr, q, SpaceConfig{Mode::modal, std::nullopt, false, 2});
    any.for_each([&](const Model& m) {
      ++models;
      CHECK(valid_in_model(m, eq1).valid == upward_heredity_violations(m).empty());
      return true;
    });
    const auto props = frame_properties(fr);
    if (props.serial) {
      ModelSpace strong(fr, q, SpaceConfig{Mode::modal, EqPrinciple::eq2, false, 2});
      strong.for_each([&](const Model& m) {
        CHECK(valid_in_model(m, eq2).valid);
        return true;
      });
    }
    if (props.reflexive && props.transitive) {
      ModelSpace up(fr, q, SpaceConfig{Mode::intuitionistic, EqPrinciple::eq1, false, 2});
      up.for_each([&](const Model& m) {
        CHECK(valid_in_model(m, lem).valid == downward_heredity_violations(m).empty());
        return true;
      });
    }
  }
  CHECK(models > 100);
}
