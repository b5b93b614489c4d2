// Copyright 2026 The icp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icp/decompose.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

namespace icp {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::DU: return "du";
    case Variant::DO: return "do";
    case Variant::PU: return "pu";
    case Variant::PO: return "po";
    case Variant::FM: return "fm";
    case Variant::FS: return "fs";
    case Variant::FE: return "fe";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c != '_') key.push_back(static_cast<char>(std::tolower(c)));
  }
  for (Variant v : kAllVariants) {
    if (key == to_string(v)) return v;
  }
  return std::nullopt;
}

std::vector<VarId> AuxDef::operands() const {
  switch (kind) {
    case Kind::PowerProduct: {
      std::vector<VarId> out;
      for (const auto& pe : powers) out.push_back(pe.first);
      return out;
    }
    case Kind::Product:
      if (a == b) return {a};
      return {a, b};
    case Kind::Power:
      return {a};
  }
  return {};
}

namespace {

bool is_full(Variant v) {
  return v == Variant::FM || v == Variant::FS || v == Variant::FE;
}

PowerProduct power_of(const PowerProduct& p, unsigned k) {
  PowerProduct out = p;
  for (auto& pe : out) pe.second *= k;
  return out;
}

struct Candidate {
  PowerProduct powers;
  AuxDef::Kind kind;
  VarId a, b;
  unsigned n;
  bool single;  // a power (or square) of one term

  // Larger exponent sum first; then powers of one term; then, among powers,
  // the lexicographically leading term; among products, the pair with the
  // latest terms, which nests long products to the right.
  bool better_than(const Candidate& o) const {
    unsigned d = degree(powers), od = degree(o.powers);
    if (d != od) return d > od;
    if (single != o.single) return single;
    if (single) return lex_before(powers, o.powers);
    if (std::max(a, b) != std::max(o.a, o.b)) return std::max(a, b) > std::max(o.a, o.b);
    return std::min(a, b) > std::min(o.a, o.b);
  }
};

class Builder {
 public:
  Builder(Variant variant, VarId first_aux)
      : variant_(variant), first_aux_(first_aux) {}

  const std::vector<AuxDef>& defs() const { return defs_; }

  // Variable standing for a nonlinear power product, created on demand.
  VarId term_for(const PowerProduct& p) {
    if (auto v = lookup(p)) return *v;
    if (!is_full(variant_)) {
      AuxDef def;
      def.kind = AuxDef::Kind::PowerProduct;
      def.powers = p;
      return add(std::move(def));
    }
    prepass(p);
    while (!lookup(p)) grow(p);
    return *lookup(p);
  }

  // Keeps only auxiliaries reachable from `roots` and renumbers them
  // consecutively. Returns the old-to-new id map for auxiliaries.
  std::map<VarId, VarId> prune(const std::vector<VarId>& roots) {
    std::vector<bool> used(defs_.size(), false);
    std::vector<VarId> stack = roots;
    while (!stack.empty()) {
      VarId v = stack.back();
      stack.pop_back();
      if (v < first_aux_ || used[v - first_aux_]) continue;
      used[v - first_aux_] = true;
      for (VarId w : defs_[v - first_aux_].operands()) stack.push_back(w);
    }
    std::map<VarId, VarId> remap;
    std::vector<AuxDef> kept;
    for (size_t i = 0; i < defs_.size(); ++i) {
      if (!used[i]) continue;
      remap[defs_[i].var] = first_aux_ + static_cast<VarId>(kept.size());
      kept.push_back(defs_[i]);
    }
    auto map_var = [&](VarId v) { return v < first_aux_ ? v : remap.at(v); };
    for (AuxDef& d : kept) {
      d.var = map_var(d.var);
      d.a = map_var(d.a);
      d.b = map_var(d.b);
    }
    defs_ = std::move(kept);
    return remap;
  }

 private:
  std::optional<VarId> lookup(const PowerProduct& p) const {
    if (p.size() == 1 && p[0].second == 1) return p[0].first;
    auto it = terms_.find(p);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  VarId add(AuxDef def) {
    def.var = first_aux_ + static_cast<VarId>(defs_.size());
    terms_[def.powers] = def.var;
    defs_.push_back(std::move(def));
    return defs_.back().var;
  }

  PowerProduct term_of(VarId v) const {
    if (v < first_aux_) return {{v, 1}};
    return defs_[v - first_aux_].powers;
  }

  void add_power(VarId base, unsigned n) {
    PowerProduct p = power_of(term_of(base), n);
    if (lookup(p)) return;
    AuxDef def;
    def.kind = AuxDef::Kind::Power;
    def.powers = p;
    def.a = base;
    def.n = n;
    add(std::move(def));
  }

  void prepass(const PowerProduct& p) {
    for (const auto& [v, e] : p) {
      if (e < 2) continue;
      if (variant_ == Variant::FE) {
        add_power(v, e);
      } else if (variant_ == Variant::FS) {
        VarId base = v;
        for (unsigned k = 2; k <= e; k *= 2) {
          add_power(base, 2);
          base = *lookup({{v, k}});
        }
      }
    }
  }

  // Adds one auxiliary for a term dividing p, built from existing terms.
  void grow(const PowerProduct& p) {
    std::vector<VarId> avail;
    for (const auto& pe : p) avail.push_back(pe.first);
    for (const AuxDef& d : defs_) {
      if (divides(d.powers, p)) avail.push_back(d.var);
    }
    std::optional<Candidate> best;
    auto consider = [&](Candidate c) {
      if (!divides(c.powers, p) || lookup(c.powers)) return;
      if (!best || c.better_than(*best)) best = std::move(c);
    };
    for (size_t i = 0; i < avail.size(); ++i) {
      VarId t = avail[i];
      PowerProduct tp = term_of(t);
      for (size_t j = i + 1; j < avail.size(); ++j) {
        consider({multiply(tp, term_of(avail[j])), AuxDef::Kind::Product, t,
                  avail[j], 0, false});
      }
      if (variant_ == Variant::FM) {
        consider({power_of(tp, 2), AuxDef::Kind::Product, t, t, 0, true});
      } else if (variant_ == Variant::FS) {
        consider({power_of(tp, 2), AuxDef::Kind::Power, t, 0, 2, true});
      } else {
        for (unsigned k = 2; divides(power_of(tp, k), p); ++k) {
          consider({power_of(tp, k), AuxDef::Kind::Power, t, 0, k, true});
        }
      }
    }
    if (!best) throw std::logic_error("no decomposition step for a power product");
    AuxDef def;
    def.kind = best->kind;
    def.powers = best->powers;
    def.a = best->a;
    def.b = best->kind == AuxDef::Kind::Power ? 0 : best->b;
    def.n = best->n;
    add(std::move(def));
  }

  Variant variant_;
  VarId first_aux_;
  std::vector<AuxDef> defs_;
  std::map<PowerProduct, VarId> terms_;
};

Monomial unit(VarId v, const Integer& c = Integer(1)) { return {c, {{v, 1}}}; }

// The definition as a constraint "term - aux = 0".
PolynomialConstraint definition_constraint(const AuxDef& d) {
  PowerProduct lhs;
  switch (d.kind) {
    case AuxDef::Kind::PowerProduct:
      lhs = d.powers;
      break;
    case AuxDef::Kind::Product:
      lhs = multiply({{d.a, 1}}, {{d.b, 1}});
      break;
    case AuxDef::Kind::Power:
      lhs = {{d.a, d.n}};
      break;
  }
  PolynomialConstraint c;
  c.lhs = Polynomial::from_ordered_terms(
      {Monomial{Integer(1), lhs}, unit(d.var, Integer(-1))});
  c.op = Relation::Eq;
  c.rhs = Integer(0);
  return c;
}

// Which nonlinear monomials of a constraint get replaced.
std::vector<bool> replaced_monomials(const PolynomialConstraint& c,
                                     Variant variant) {
  const auto& terms = c.lhs.terms();
  std::vector<bool> out(terms.size(), false);
  if (variant == Variant::DU || variant == Variant::DO) return out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_nonlinear()) continue;
    if (variant != Variant::PO) {
      out[i] = true;
      continue;
    }
    // Replace while a variable of this monomial still occurs elsewhere.
    for (size_t j = 0; j < terms.size() && !out[i]; ++j) {
      if (j == i || out[j]) continue;
      for (const auto& pe : terms[i].powers) {
        if (exponent_of(terms[j].powers, pe.first) > 0) {
          out[i] = true;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

Decomposed decompose(const Csp& source, Variant variant, DivisionMode division) {
  Decomposed d;
  d.variant = variant;
  d.csp.goal = source.goal;
  d.csp.objective = source.objective;
  d.csp.infeasible = source.infeasible;
  d.csp.variables = source.variables;
  d.csp.sources = source.sources;
  d.user_vars = static_cast<uint32_t>(source.variables.size());

  std::vector<PolynomialConstraint> problem = source.constraints;
  if (source.goal == Goal::Maximize) {
    VarId o = static_cast<VarId>(d.csp.variables.size());
    d.csp.variables.push_back({"_objective", IntegerInterval::all()});
    d.objective = o;
    Normalized n = normalize(expr::sub(expr::var(o), source.objective),
                             Comparison::Eq, expr::lit(0));
    problem.push_back(n.constraint);
  }

  // Rewrite problem constraints, recording replaced power products.
  Builder builder(variant, d.first_aux());
  std::vector<VarId> roots;
  for (PolynomialConstraint& c : problem) {
    std::vector<bool> replace = replaced_monomials(c, variant);
    if (std::none_of(replace.begin(), replace.end(), [](bool b) { return b; })) {
      continue;
    }
    std::vector<Monomial> terms = c.lhs.terms();
    for (size_t i = 0; i < terms.size(); ++i) {
      if (!replace[i]) continue;
      VarId v = builder.term_for(terms[i].powers);
      roots.push_back(v);
      terms[i].powers = {{v, 1}};
    }
    c.lhs = Polynomial::from_ordered_terms(std::move(terms));
  }
  std::map<VarId, VarId> remap = builder.prune(roots);
  for (PolynomialConstraint& c : problem) {
    std::vector<Monomial> terms = c.lhs.terms();
    bool changed = false;
    for (Monomial& m : terms) {
      for (auto& pe : m.powers) {
        auto it = remap.find(pe.first);
        if (it != remap.end() && it->second != pe.first) {
          pe.first = it->second;
          changed = true;
        }
      }
    }
    if (changed) c.lhs = Polynomial::from_ordered_terms(std::move(terms));
  }
  d.aux = builder.defs();

  // Auxiliary variables and their definition rules.
  for (AuxDef& a : d.aux) {
    d.csp.variables.push_back(
        {"_a" + std::to_string(a.var - d.first_aux() + 1), IntegerInterval::all()});
    PolynomialConstraint def = definition_constraint(a);
    std::vector<ReductionRule> rules;
    switch (a.kind) {
      case AuxDef::Kind::PowerProduct: {
        auto c = std::make_shared<const PolynomialConstraint>(def);
        rules = rules_for_constraint(c, false);
        std::rotate(rules.begin(), rules.end() - 1, rules.end());
        break;
      }
      case AuxDef::Kind::Product:
        rules = rules_for_product(a.a, a.b, a.var, division);
        break;
      case AuxDef::Kind::Power:
        rules = rules_for_power(a.var, a.a, a.n);
        break;
    }
    a.forward_rule = static_cast<uint32_t>(d.rules.size());
    for (size_t i = 1; i < rules.size(); ++i) {
      a.backward_rules.push_back(static_cast<uint32_t>(d.rules.size() + i));
    }
    for (ReductionRule& r : rules) d.rules.push_back(std::move(r));
    d.csp.constraints.push_back(std::move(def));
  }

  bool optimized = variant == Variant::DO;
  for (PolynomialConstraint& c : problem) {
    auto shared = std::make_shared<const PolynomialConstraint>(c);
    for (ReductionRule& r : rules_for_constraint(shared, optimized)) {
      d.rules.push_back(std::move(r));
    }
    d.csp.constraints.push_back(std::move(c));
  }

  d.readers.assign(d.csp.variables.size(), {});
  for (uint32_t i = 0; i < d.rules.size(); ++i) {
    for (VarId v : d.rules[i].reads) d.readers[v].push_back(i);
  }
  d.schedule = generate_schedule(d);
  return d;
}

void compute_aux_domains(const Decomposed& d, DomainStore& store) {
  for (const AuxDef& a : d.aux) {
    switch (a.kind) {
      case AuxDef::Kind::PowerProduct:
        store[a.var] = eval_monomial(Monomial{Integer(1), a.powers}, store);
        break;
      case AuxDef::Kind::Product:
        store[a.var] = mult_int(store[a.a], store[a.b]);
        break;
      case AuxDef::Kind::Power:
        store[a.var] = exp_int(store[a.a], a.n);
        break;
    }
  }
}

DomainStore initial_store(const Decomposed& d) {
  DomainStore store;
  for (const Variable& v : d.csp.variables) store.push_back(v.domain);
  compute_aux_domains(d, store);
  return store;
}

std::vector<uint32_t> generate_schedule(const Decomposed& d) {
  std::vector<uint32_t> out;
  std::vector<bool> seen(d.rules.size(), false);
  auto emit = [&](uint32_t r) {
    out.push_back(r);
    seen[r] = true;
  };
  uint32_t first_problem_rule = 0;
  for (const AuxDef& a : d.aux) {
    first_problem_rule = std::max<uint32_t>(
        first_problem_rule,
        a.backward_rules.empty() ? a.forward_rule + 1 : a.backward_rules.back() + 1);
  }

  for (uint32_t f = first_problem_rule; f < d.rules.size(); ++f) {
    std::vector<bool> visited(d.aux.size(), false);
    // Forward evaluation: operands before the auxiliary they define.
    auto forward = [&](auto& self, VarId v) -> void {
      if (!d.is_aux(v) || visited[v - d.first_aux()]) return;
      visited[v - d.first_aux()] = true;
      const AuxDef& a = d.aux_of(v);
      for (VarId w : a.operands()) self(self, w);
      emit(a.forward_rule);
    };
    for (VarId v : d.rules[f].reads) forward(forward, v);
    emit(f);
    std::fill(visited.begin(), visited.end(), false);
    // Backward propagation: an auxiliary before its operands.
    auto backward = [&](auto& self, VarId v) -> void {
      if (!d.is_aux(v) || visited[v - d.first_aux()]) return;
      visited[v - d.first_aux()] = true;
      const AuxDef& a = d.aux_of(v);
      for (uint32_t r : a.backward_rules) emit(r);
      for (VarId w : a.operands()) self(self, w);
    };
    backward(backward, d.rules[f].target);
  }
  for (uint32_t r = 0; r < d.rules.size(); ++r) {
    if (!seen[r]) out.push_back(r);
  }
  return out;
}

}  // namespace icp
