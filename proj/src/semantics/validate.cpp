#include <string>
#include <vector>

#include "monotrick/model.hpp"

namespace monotrick {

namespace {

class Witness {
 public:
  explicit Witness(const Model& m) : m_(m) {}

  Witness& world(World w) { return item(m_.frame.name(w)); }
  Witness& individual(Individual a) {
    return item(a < m_.individuals.size() ? m_.individuals[a] : "#" + std::to_string(a));
  }
  Witness& tuple(const std::vector<Individual>& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ',';
      s += t[i] < m_.individuals.size() ? m_.individuals[t[i]] : "#" + std::to_string(t[i]);
    }
    return item(s + "]");
  }
  Witness& item(const std::string& s) {
    if (!text_.empty()) text_ += ',';
    text_ += s;
    return *this;
  }
  std::string str() const { return "(" + text_ + ")"; }

 private:
  const Model& m_;
  std::string text_;
};

void add(std::vector<Violation>& out, std::string_view invariant, const Witness& w) {
  out.push_back({std::string(invariant), w.str()});
}

std::vector<Violation> valuation_violations(const Model& m) {
  std::vector<Violation> out;
  const auto& val = m.valuation;
  for (std::size_t l = 0; l < val.letter_count(); ++l) {
    for (World w = 0; w < m.frame.size(); ++w) {
      for (std::size_t code = 0; code < val.code_count(l); ++code) {
        if (!val.holds_code(w, l, code)) continue;
        const auto tuple = val.decode(l, code);
        for (Individual a : tuple) {
          if (!m.domains.contains(w, a)) {
            add(out, invariant::valuation_in_domain,
                Witness(m).world(w).item(val.letter(l)).tuple(tuple));
            break;
          }
        }
        if (m.mode != Mode::intuitionistic) continue;
        for (World v : m.frame.successors(w)) {
          if (!val.holds_code(v, l, code)) {
            add(out, invariant::heredity,
                Witness(m).world(w).world(v).item(val.letter(l)).tuple(tuple));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Violation> preorder_violations(const Model& m) {
  std::vector<Violation> out;
  const auto& fr = m.frame;
  for (World w = 0; w < fr.size(); ++w) {
    if (!fr.sees(w, w)) add(out, invariant::preorder, Witness(m).item("reflexivity").world(w));
  }
  for (World w = 0; w < fr.size(); ++w) {
    for (World v : fr.successors(w)) {
      for (World u : fr.successors(v)) {
        if (!fr.sees(w, u)) {
          add(out, invariant::preorder, Witness(m).item("transitivity").world(w).world(v).world(u));
        }
      }
    }
  }
  return out;
}

std::vector<Violation> identity_violations(const Model& m) {
  std::vector<Violation> out;
  for (World w = 0; w < m.frame.size(); ++w) {
    for (Individual a : m.domains.members(w)) {
      const Individual r = m.equality.representative(w, a);
      if (r != a && r != kNoIndividual) {
        add(out, invariant::eq3_identity, Witness(m).world(w).individual(r).individual(a));
      }
    }
  }
  return out;
}

void append(std::vector<Violation>& out, std::vector<Violation> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::vector<Violation> domain_violations(const Model& m) {
  std::vector<Violation> out;
  const auto& fr = m.frame;
  const auto& dom = m.domains;
  for (World w = 0; w < fr.size(); ++w) {
    if (dom.members(w).empty()) add(out, invariant::nonempty_domain, Witness(m).world(w));
  }
  for (auto [w, v] : fr.edges()) {
    for (Individual a : dom.members(w)) {
      if (!dom.contains(v, a)) {
        add(out, invariant::expanding_domains, Witness(m).world(w).world(v).individual(a));
      }
    }
  }
  if (dom.constant_domains()) {
    for (World w = 1; w < fr.size(); ++w) {
      if (dom.members(w) != dom.members(0)) {
        add(out, invariant::constant_domains, Witness(m).world(0).world(w));
      }
    }
  }
  return out;
}

std::vector<Violation> partition_violations(const Model& m) {
  std::vector<Violation> out;
  const auto& eq = m.equality;
  for (World w = 0; w < m.frame.size(); ++w) {
    for (Individual a = 0; a < m.individuals.size(); ++a) {
      const Individual r = eq.representative(w, a);
      const bool inside = m.domains.contains(w, a);
      if (inside && r == kNoIndividual) {
        add(out, invariant::partition, Witness(m).item("uncovered").world(w).individual(a));
      } else if (!inside && r != kNoIndividual) {
        add(out, invariant::partition, Witness(m).item("outside domain").world(w).individual(a));
      }
    }
  }
  return out;
}

std::vector<Violation> congruence_violations(const Model& m) {
  std::vector<Violation> out;
  const auto& val = m.valuation;
  const auto& eq = m.equality;
  for (std::size_t l = 0; l < val.letter_count(); ++l) {
    if (val.arity(l) <= 0) continue;
    for (World w = 0; w < m.frame.size(); ++w) {
      for (std::size_t code = 0; code < val.code_count(l); ++code) {
        auto tuple = val.decode(l, code);
        bool covered = true;
        auto image = tuple;
        for (auto& a : image) {
          if (!m.domains.contains(w, a) || eq.representative(w, a) == kNoIndividual) {
            covered = false;
            break;
          }
          a = eq.representative(w, a);
        }
        if (!covered || image == tuple) continue;
        if (val.holds_code(w, l, code) != val.holds(w, l, image)) {
          add(out, invariant::congruence,
              Witness(m).world(w).item(val.letter(l)).tuple(tuple).tuple(image));
        }
      }
    }
  }
  return out;
}

std::vector<Violation> upward_heredity_violations(const Model& m) {
  std::vector<Violation> out;
  const auto& eq = m.equality;
  for (auto [w, v] : m.frame.edges()) {
    const auto& d = m.domains.members(w);
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (eq.same(w, d[i], d[j]) && !eq.same(v, d[i], d[j])) {
          add(out, invariant::eq1_upward,
              Witness(m).world(w).world(v).individual(d[i]).individual(d[j]));
        }
      }
    }
  }
  return out;
}

std::vector<Violation> downward_heredity_violations(const Model& m) {
  std::vector<Violation> out;
  const auto& eq = m.equality;
  for (auto [w, v] : m.frame.edges()) {
    const auto& d = m.domains.members(w);
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (eq.same(v, d[i], d[j]) && !eq.same(w, d[i], d[j])) {
          add(out, invariant::eq2_downward,
              Witness(m).world(w).world(v).individual(d[i]).individual(d[j]));
        }
      }
    }
  }
  return out;
}

ValidationReport validate_model(const Model& m) {
  ValidationReport report;
  auto& out = report.violations;
  append(out, domain_violations(m));
  append(out, valuation_violations(m));
  if (m.mode == Mode::intuitionistic) append(out, preorder_violations(m));
  append(out, partition_violations(m));
  append(out, congruence_violations(m));
  switch (m.equality.principle()) {
    case EqPrinciple::eq1:
      append(out, upward_heredity_violations(m));
      break;
    case EqPrinciple::eq2:
      append(out, upward_heredity_violations(m));
      append(out, downward_heredity_violations(m));
      break;
    case EqPrinciple::eq3:
      append(out, identity_violations(m));
      break;
  }
  return report;
}

}  // namespace monotrick
