#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using monotrick::Kind;
using monotrick::Mode;

namespace {

bool atom_true(const Model& m, World w, const Sigma& sigma, const Formula& f) {
  auto letter = m.valuation.find(f.letter());
  if (!letter) return false;
  std::vector<Individual> tuple;
  for (const auto& v : f.arguments()) tuple.push_back(sigma.at(v));
  return m.valuation.holds(w, *letter, tuple);
}

}  // namespace

bool naive_eval(const Model& m, World w, const Sigma& sigma, const Formula& f) {
  const bool intuitionistic = m.mode == Mode::intuitionistic;
  auto later = [&](auto&& pred) {
    for (World v = 0; v < m.frame.size(); ++v) {
      if (m.frame.sees(w, v) && !pred(v)) return false;
    }
    return true;
  };
  switch (f.kind()) {
    case Kind::verum: return true;
    case Kind::falsum: return false;
    case Kind::atom: return atom_true(m, w, sigma, f);
    case Kind::equality:
      return m.equality.same(w, sigma.at(f.arguments()[0]), sigma.at(f.arguments()[1]));
    case Kind::conjunction: return naive_eval(m, w, sigma, f.lhs()) && naive_eval(m, w, sigma, f.rhs());
    case Kind::disjunction: return naive_eval(m, w, sigma, f.lhs()) || naive_eval(m, w, sigma, f.rhs());
    case Kind::negation:
      if (intuitionistic) return later([&](World v) { return !naive_eval(m, v, sigma, f.body()); });
      return !naive_eval(m, w, sigma, f.body());
    case Kind::implication:
      if (intuitionistic) {
        return later([&](World v) {
          return !naive_eval(m, v, sigma, f.lhs()) || naive_eval(m, v, sigma, f.rhs());
        });
      }
      return !naive_eval(m, w, sigma, f.lhs()) || naive_eval(m, w, sigma, f.rhs());
    case Kind::biconditional:
      if (intuitionistic) {
        return later([&](World v) {
          return naive_eval(m, v, sigma, f.lhs()) == naive_eval(m, v, sigma, f.rhs());
        });
      }
      return naive_eval(m, w, sigma, f.lhs()) == naive_eval(m, w, sigma, f.rhs());
    case Kind::box: return later([&](World v) { return naive_eval(m, v, sigma, f.body()); });
    case Kind::diamond: return !later([&](World v) { return !naive_eval(m, v, sigma, f.body()); });
    case Kind::exists:
      for (Individual a : m.domains.members(w)) {
        Sigma s = sigma;
        s[f.variable()] = a;
        if (naive_eval(m, w, s, f.body())) return true;
      }
      return false;
    case Kind::forall: {
      auto all_at = [&](World v) {
        for (Individual a : m.domains.members(v)) {
          Sigma s = sigma;
          s[f.variable()] = a;
          if (!naive_eval(m, v, s, f.body())) return false;
        }
        return true;
      };
      return intuitionistic ? later(all_at) : all_at(w);
    }
  }
  return false;
}

bool naive_classical(const Structure& s, const Sigma& sigma, const Formula& f) {
  switch (f.kind()) {
    case Kind::verum: return true;
    case Kind::falsum: return false;
    case Kind::atom: {
      const auto& args = f.arguments();
      if (args.size() == 2) return s.binary.contains({sigma.at(args[0]), sigma.at(args[1])});
      if (args.size() == 1) {
        auto it = s.unary.find(f.letter());
        return it != s.unary.end() && it->second.contains(sigma.at(args[0]));
      }
      auto it = s.props.find(f.letter());
      return it != s.props.end() && it->second;
    }
    case Kind::equality: return sigma.at(f.arguments()[0]) == sigma.at(f.arguments()[1]);
    case Kind::negation: return !naive_classical(s, sigma, f.body());
    case Kind::conjunction: return naive_classical(s, sigma, f.lhs()) && naive_classical(s, sigma, f.rhs());
    case Kind::disjunction: return naive_classical(s, sigma, f.lhs()) || naive_classical(s, sigma, f.rhs());
    case Kind::implication: return !naive_classical(s, sigma, f.lhs()) || naive_classical(s, sigma, f.rhs());
    case Kind::biconditional: return naive_classical(s, sigma, f.lhs()) == naive_classical(s, sigma, f.rhs());
    case Kind::forall:
    case Kind::exists: {
      const bool universal = f.kind() == Kind::forall;
      for (Individual a = 0; a < s.size; ++a) {
        Sigma t = sigma;
        t[f.variable()] = a;
        if (naive_classical(s, t, f.body()) != universal) return !universal;
      }
      return universal;
    }
    case Kind::box:
    case Kind::diamond: break;
  }
  throw std::logic_error("modal operator in a classical formula");
}

Formula FormulaGen::atomic() {
  const auto& vars = shape_.variables;
  std::vector<int> kinds = {0, 0, 0, 1};  // atoms are three times as likely
  if (shape_.equality) kinds.push_back(2);
  if (shape_.negation) kinds.push_back(3);
  switch (kinds[pick(kinds.size())]) {
    case 0: {
      if (shape_.letters.empty()) return Formula::verum();
      const auto& l = shape_.letters[pick(shape_.letters.size())];
      std::vector<std::string> args;
      for (int i = 0; i < l.arity; ++i) args.push_back(vars[pick(vars.size())]);
      return Formula::atom(l.name, std::move(args));
    }
    case 1: return Formula::verum();
    case 2: return Formula::equality(vars[pick(vars.size())], vars[pick(vars.size())]);
    default: return Formula::falsum();
  }
}

Formula FormulaGen::operator()(int depth) {
  if (depth <= 0 || pick(5) == 0) return atomic();
  std::vector<Kind> ops = {Kind::conjunction, Kind::disjunction, Kind::implication,
                           Kind::biconditional};
  if (shape_.negation) ops.push_back(Kind::negation);
  if (shape_.modal) {
    ops.push_back(Kind::box);
    ops.push_back(Kind::diamond);
  }
  if (shape_.quantifiers) {
    ops.push_back(Kind::forall);
    ops.push_back(Kind::exists);
  }
  const Kind k = ops[pick(ops.size())];
  const auto& vars = shape_.variables;
  switch (k) {
    case Kind::negation: return Formula::negation((*this)(depth - 1));
    case Kind::box: return Formula::box((*this)(depth - 1));
    case Kind::diamond: return Formula::diamond((*this)(depth - 1));
    case Kind::forall: return Formula::forall(vars[pick(vars.size())], (*this)(depth - 1));
    case Kind::exists: return Formula::exists(vars[pick(vars.size())], (*this)(depth - 1));
    case Kind::conjunction: return Formula::conjunction((*this)(depth - 1), (*this)(depth - 1));
    case Kind::disjunction: return Formula::disjunction((*this)(depth - 1), (*this)(depth - 1));
    case Kind::implication: return Formula::implication((*this)(depth - 1), (*this)(depth - 1));
    default: return Formula::biconditional((*this)(depth - 1), (*this)(depth - 1));
  }
}

namespace {

// Per-world class labels; label[w][a] is meaningful for a in D(w).
using Labels = std::vector<std::vector<std::size_t>>;

bool merge(std::vector<std::size_t>& label, std::size_t a, std::size_t b) {
  const std::size_t from = label[b];
  const std::size_t to = label[a];
  if (from == to) return false;
  for (auto& l : label) {
    if (l == from) l = to;
  }
  return true;
}

}  // namespace

Model random_model(const ModelShape& shape, std::mt19937_64& rng) {
  using monotrick::EqPrinciple;
  std::bernoulli_distribution edge(shape.edge_probability);
  std::bernoulli_distribution truth(shape.truth_probability);
  std::bernoulli_distribution merge_coin(shape.merge_probability);
  std::uniform_int_distribution<std::size_t> size_dist(1, shape.pool);
  const std::size_t n = shape.worlds;
  const bool intuitionistic = shape.mode == Mode::intuitionistic;

  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto& row : r) {
    for (std::size_t j = 0; j < n; ++j) row[j] = edge(rng);
  }
  if (intuitionistic) {
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
      }
    }
  }
  auto frame = monotrick::Frame::canonical(n);
  for (World i = 0; i < n; ++i) {
    for (World j = 0; j < n; ++j) {
      if (r[i][j]) frame.connect(i, j);
    }
  }

  std::vector<std::size_t> sizes(n);
  for (auto& s : sizes) s = size_dist(rng);
  if (shape.constant) {
    const std::size_t top = *std::max_element(sizes.begin(), sizes.end());
    std::fill(sizes.begin(), sizes.end(), top);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [w, v] : frame.edges()) {
      if (sizes[v] < sizes[w]) {
        sizes[v] = sizes[w];
        changed = true;
      }
    }
  }

  std::vector<std::string> names;
  for (std::size_t a = 0; a < shape.pool; ++a) names.push_back("a" + std::to_string(a));
  Model m = monotrick::make_model(frame, names, shape.mode, shape.principle, shape.constant);
  for (World w = 0; w < n; ++w) m.domains.assign_prefix(w, sizes[w]);

  Labels labels(n, std::vector<std::size_t>(shape.pool));
  for (auto& l : labels) std::iota(l.begin(), l.end(), 0);
  if (shape.principle != EqPrinciple::eq3) {
    for (World w = 0; w < n; ++w) {
      for (std::size_t a = 0; a < sizes[w]; ++a) {
        for (std::size_t b = a + 1; b < sizes[w]; ++b) {
          if (merge_coin(rng)) merge(labels[w], a, b);
        }
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [w, v] : frame.edges()) {
        for (std::size_t a = 0; a < sizes[w]; ++a) {
          for (std::size_t b = a + 1; b < sizes[w]; ++b) {
            if (labels[w][a] == labels[w][b]) changed |= merge(labels[v], a, b);
            if (shape.principle == EqPrinciple::eq2 && labels[v][a] == labels[v][b]) {
              changed |= merge(labels[w], a, b);
            }
          }
        }
      }
    }
  }
  for (World w = 0; w < n; ++w) {
    for (Individual a = 0; a < sizes[w]; ++a) {
      Individual rep = a;
      for (Individual b = 0; b < a; ++b) {
        if (labels[w][b] == labels[w][a]) {
          rep = b;
          break;
        }
      }
      m.equality.set_representative(w, a, rep);
    }
  }

  for (const auto& l : shape.letters) {
    const std::size_t letter = m.valuation.declare(l.name, l.arity);
    const std::size_t codes = m.valuation.code_count(letter);
    auto in_domain = [&](World w, std::size_t code) {
      for (Individual a : m.valuation.decode(letter, code)) {
        if (a >= sizes[w]) return false;
      }
      return true;
    };
    auto image = [&](World w, std::size_t code) {
      auto t = m.valuation.decode(letter, code);
      for (auto& a : t) a = m.equality.representative(w, a);
      return m.valuation.tuple_code(t);
    };
    for (World w = 0; w < n; ++w) {
      for (std::size_t c = 0; c < codes; ++c) {
        if (in_domain(w, c) && truth(rng)) m.valuation.set_code(w, letter, c, true);
      }
    }
    // close under congruence (and heredity), only ever adding truths
    for (bool changed = true; changed;) {
      changed = false;
      for (World w = 0; w < n; ++w) {
        for (std::size_t c = 0; c < codes; ++c) {
          if (!in_domain(w, c)) continue;
          const std::size_t rc = image(w, c);
          if (m.valuation.holds_code(w, letter, c) != m.valuation.holds_code(w, letter, rc)) {
            m.valuation.set_code(w, letter, c, true);
            m.valuation.set_code(w, letter, rc, true);
            changed = true;
          }
        }
      }
      if (!intuitionistic) continue;
      for (auto [w, v] : frame.edges()) {
        for (std::size_t c = 0; c < codes; ++c) {
          if (m.valuation.holds_code(w, letter, c) && !m.valuation.holds_code(v, letter, c)) {
            m.valuation.set_code(v, letter, c, true);
            changed = true;
          }
        }
      }
    }
  }
  return m;
}

std::vector<Sigma> assignments(const Model& m, World w, const std::vector<std::string>& vars) {
  std::vector<Sigma> out;
  const auto& d = m.domains.members(w);
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Sigma s;
    for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = d[idx[i]];
    out.push_back(std::move(s));
    std::size_t i = vars.size();
    while (i > 0 && ++idx[i - 1] == d.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace oracle
