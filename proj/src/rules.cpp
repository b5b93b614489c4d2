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

#include "icp/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace icp {

const char* to_string(RuleKind k) {
  switch (k) {
    case RuleKind::LinearEq: return "LinearEq";
    case RuleKind::LinearIneq: return "LinearIneq";
    case RuleKind::PolyEq: return "PolyEq";
    case RuleKind::PolyEqOpt: return "PolyEqOpt";
    case RuleKind::PolyIneq: return "PolyIneq";
    case RuleKind::PolyIneqOpt: return "PolyIneqOpt";
    case RuleKind::Mult1: return "Mult1";
    case RuleKind::Mult2: return "Mult2";
    case RuleKind::Mult3: return "Mult3";
    case RuleKind::Mult2w: return "Mult2w";
    case RuleKind::Mult3w: return "Mult3w";
    case RuleKind::Expo: return "Expo";
    case RuleKind::RootX: return "RootX";
    case RuleKind::Diseq: return "Diseq";
  }
  return "?";
}

namespace {

std::string name_of(VarId v, const std::vector<std::string>& names) {
  return v < names.size() ? names[v] : "v" + std::to_string(v);
}

}  // namespace

std::string ReductionRule::describe(
    const std::vector<std::string>& names) const {
  std::string s = std::string(to_string(kind)) + "[" + name_of(target, names) + "] ";
  switch (kind) {
    case RuleKind::Mult1:
    case RuleKind::Mult2:
    case RuleKind::Mult3:
    case RuleKind::Mult2w:
    case RuleKind::Mult3w:
      return s + name_of(x, names) + "*" + name_of(y, names) + " = " +
             name_of(z, names);
    case RuleKind::Expo:
    case RuleKind::RootX:
      return s + name_of(x, names) + " = " + name_of(y, names) + "^" +
             std::to_string(n);
    default:
      return s + constraint->to_string(names);
  }
}

// ============================================================================
// Rule construction
// ============================================================================

namespace {

PowerProduct without(const PowerProduct& p, VarId v) {
  PowerProduct out;
  for (const auto& pe : p) {
    if (pe.first != v) out.push_back(pe);
  }
  return out;
}

PowerProduct common_part(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  for (const auto& [v, e] : a) {
    unsigned k = std::min(e, exponent_of(b, v));
    if (k > 0) out.emplace_back(v, k);
  }
  return out;
}

// Splits (b - sum of the other monomials) / divisor into fractions with
// common powers and coefficient gcds divided out, grouped by denominator.
std::vector<FractionGroup> build_groups(const PolynomialConstraint& c,
                                        uint32_t skip,
                                        const Monomial& divisor) {
  std::vector<FractionGroup> groups;
  auto add = [&](const Integer& coeff, const PowerProduct& p, bool negate) {
    PowerProduct common = common_part(divisor.powers, p);
    Integer g = gcd(coeff, divisor.coeff);
    Integer num = floor_div(coeff, g), den = floor_div(divisor.coeff, g);
    if (den.sign() < 0) {
      num = -num;
      den = -den;
    }
    if (negate) num = -num;
    Monomial numerator{num, quotient(p, common)};
    Monomial denominator{den, quotient(divisor.powers, common)};
    for (FractionGroup& grp : groups) {
      if (grp.denominator == denominator) {
        grp.numerators.push_back(std::move(numerator));
        return;
      }
    }
    groups.push_back({std::move(denominator), {std::move(numerator)}});
  };
  if (!c.rhs.is_zero()) add(c.rhs, {}, false);
  const auto& terms = c.lhs.terms();
  for (uint32_t i = 0; i < terms.size(); ++i) {
    if (i != skip) add(terms[i].coeff, terms[i].powers, true);
  }
  return groups;
}

}  // namespace

std::vector<ReductionRule> rules_for_constraint(
    std::shared_ptr<const PolynomialConstraint> c, bool optimized) {
  const auto& terms = c->lhs.terms();
  std::vector<VarId> vars;
  for (const Monomial& m : terms) {
    for (const auto& pe : m.powers) vars.push_back(pe.first);
  }
  std::sort(vars.begin(), vars.end());
  // Number of monomials each variable occurs in.
  auto occurrences = [&](VarId v) {
    return std::count(vars.begin(), vars.end(), v);
  };
  std::vector<VarId> unique_vars = vars;
  unique_vars.erase(std::unique(unique_vars.begin(), unique_vars.end()),
                    unique_vars.end());

  bool linear = c->lhs.is_linear();
  std::vector<ReductionRule> out;
  for (uint32_t i = 0; i < terms.size(); ++i) {
    for (const auto& [v, e] : terms[i].powers) {
      ReductionRule r;
      r.target = v;
      r.constraint = c;
      r.monomial = i;
      r.power = e;
      r.divisor = Monomial{terms[i].coeff, without(terms[i].powers, v)};
      bool eq = c->op == Relation::Eq;
      if (c->op == Relation::Neq) {
        r.kind = RuleKind::Diseq;
      } else if (linear) {
        r.kind = eq ? RuleKind::LinearEq : RuleKind::LinearIneq;
      } else if (optimized) {
        r.kind = eq ? RuleKind::PolyEqOpt : RuleKind::PolyIneqOpt;
        r.groups = build_groups(*c, i, r.divisor);
      } else {
        r.kind = eq ? RuleKind::PolyEq : RuleKind::PolyIneq;
      }
      bool pure_intersection =
          r.kind != RuleKind::Diseq && occurrences(v) == 1 && e % 2 == 1;
      for (VarId w : unique_vars) {
        if (w != v || !pure_intersection) r.reads.push_back(w);
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<ReductionRule> rules_for_product(VarId x, VarId y, VarId z,
                                             DivisionMode mode) {
  bool weak = mode == DivisionMode::Weak;
  auto make = [&](RuleKind k, VarId target, std::vector<VarId> reads) {
    ReductionRule r;
    r.kind = k;
    r.target = target;
    r.x = x;
    r.y = y;
    r.z = z;
    std::sort(reads.begin(), reads.end());
    reads.erase(std::unique(reads.begin(), reads.end()), reads.end());
    r.reads = std::move(reads);
    return r;
  };
  std::vector<ReductionRule> out;
  out.push_back(make(RuleKind::Mult1, z, {x, y}));
  if (x == y) {
    out.push_back(make(weak ? RuleKind::Mult2w : RuleKind::Mult2, x, {z, x}));
  } else {
    out.push_back(make(weak ? RuleKind::Mult2w : RuleKind::Mult2, x, {z, y}));
    out.push_back(make(weak ? RuleKind::Mult3w : RuleKind::Mult3, y, {z, x}));
  }
  return out;
}

std::vector<ReductionRule> rules_for_power(VarId x, VarId y, unsigned n) {
  ReductionRule expo;
  expo.kind = RuleKind::Expo;
  expo.target = x;
  expo.x = x;
  expo.y = y;
  expo.n = n;
  expo.reads = {y};
  ReductionRule rootx = expo;
  rootx.kind = RuleKind::RootX;
  rootx.target = y;
  rootx.reads = {x};
  if (n % 2 == 0) rootx.reads = {std::min(x, y), std::max(x, y)};
  return {expo, rootx};
}

// ============================================================================
// Evaluation
// ============================================================================

IntegerInterval eval_monomial(const Monomial& m, const DomainStore& store,
                              OpCounters* ops) {
  IntegerInterval result;
  bool first = true;
  for (const auto& [v, e] : m.powers) {
    IntegerInterval f = e == 1 ? store[v] : exp_int(store[v], e, ops);
    result = first ? std::move(f) : mult_int(result, f, ops);
    first = false;
  }
  if (first) return IntegerInterval::point(m.coeff);
  if (!m.coeff.is_one()) result = scale(result, m.coeff, ops);
  return result;
}

IntegerInterval eval_int(const Expr& e, const DomainStore& store,
                         OpCounters* ops) {
  switch (e->kind) {
    case ExprKind::Var:
      return store.at(e->var);
    case ExprKind::IntLit:
      return IntegerInterval::point(e->value);
    case ExprKind::Neg:
      return scale(eval_int(e->lhs, store, ops), Integer(-1), ops);
    case ExprKind::Add:
      return add(eval_int(e->lhs, store, ops), eval_int(e->rhs, store, ops), ops);
    case ExprKind::Sub:
      return sub(eval_int(e->lhs, store, ops), eval_int(e->rhs, store, ops), ops);
    case ExprKind::Mul:
      if (e->lhs->kind == ExprKind::IntLit) {
        return scale(eval_int(e->rhs, store, ops), e->lhs->value, ops);
      }
      if (e->rhs->kind == ExprKind::IntLit) {
        return scale(eval_int(e->lhs, store, ops), e->rhs->value, ops);
      }
      return mult_int(eval_int(e->lhs, store, ops),
                      eval_int(e->rhs, store, ops), ops);
    case ExprKind::Pow:
      return exp_int(eval_int(e->lhs, store, ops), e->exponent, ops);
    case ExprKind::Root:
      return root(eval_int(e->lhs, store, ops), e->exponent, ops).hull();
    case ExprKind::Div:
      return div_int(eval_int(e->lhs, store, ops),
                     eval_int(e->rhs, store, ops), ops);
  }
  return IntegerInterval::empty();
}

// ============================================================================
// Application
// ============================================================================

namespace {

RuleOutcome commit(DomainStore& store, VarId v, IntegerInterval next) {
  if (next == store[v]) return {RuleStatus::Unchanged, v};
  bool empty = next.is_empty();
  store[v] = std::move(next);
  return {empty ? RuleStatus::Failed : RuleStatus::Reduced, v};
}

bool is_inequality(RuleKind k) {
  return k == RuleKind::LinearIneq || k == RuleKind::PolyIneq ||
         k == RuleKind::PolyIneqOpt;
}

// Candidate set for target^power, before the root is taken.
IntegerInterval isolate(const ReductionRule& r, const DomainStore& store,
                        OpCounters* ops) {
  const PolynomialConstraint& c = *r.constraint;
  const auto& terms = c.lhs.terms();
  IntegerInterval rest = IntegerInterval::point(c.rhs);
  for (uint32_t i = 0; i < terms.size(); ++i) {
    if (i != r.monomial) rest = sub(rest, eval_monomial(terms[i], store, ops), ops);
  }
  bool ineq = is_inequality(r.kind);
  if (ineq && !rest.is_empty()) {
    rest = rest.has_hi() ? IntegerInterval::at_most(rest.hi())
                         : IntegerInterval::all();
  }
  const Monomial& d = r.divisor;
  if (d.powers.empty() && abs(d.coeff).is_one()) {
    return d.coeff.is_one() ? rest : scale(rest, d.coeff, ops);
  }
  IntegerInterval s = eval_monomial(d, store, ops);
  return ineq ? div_halfline(rest, s, ops) : div_int(rest, s, ops);
}

IntegerInterval isolate_optimized(const ReductionRule& r,
                                  const DomainStore& store, OpCounters* ops) {
  int sign = r.divisor.coeff.sign();
  for (const auto& [v, e] : r.divisor.powers) {
    const IntegerInterval& dv = store[v];
    if (dv.contains_zero()) return isolate(r, store, ops);
    if (e % 2 == 1 && dv.has_hi() && dv.hi().sign() < 0) sign = -sign;
  }
  RationalInterval total = RationalInterval::point(Rational(0));
  bool first = true;
  for (const FractionGroup& g : r.groups) {
    IntegerInterval p;
    for (size_t k = 0; k < g.numerators.size(); ++k) {
      IntegerInterval m = eval_monomial(g.numerators[k], store, ops);
      p = k == 0 ? std::move(m) : add(p, m, ops);
    }
    IntegerInterval t = eval_monomial(g.denominator, store, ops);
    RationalInterval q =
        q_div(RationalInterval::from(p), RationalInterval::from(t), ops);
    total = first ? std::move(q) : q_add(total, q, ops);
    first = false;
  }
  if (r.kind == RuleKind::PolyEqOpt) return total.integers();
  return q_to_halfline(total, sign > 0 ? HalfLine::AtMost : HalfLine::AtLeast);
}

RuleOutcome apply_polynomial(const ReductionRule& r, DomainStore& store,
                             OpCounters* ops) {
  IntegerInterval q = (r.kind == RuleKind::PolyEqOpt ||
                       r.kind == RuleKind::PolyIneqOpt)
                          ? isolate_optimized(r, store, ops)
                          : isolate(r, store, ops);
  const IntegerInterval& d = store[r.target];
  if (r.power == 1) return commit(store, r.target, intersect(d, q));
  return commit(store, r.target,
                intersect(root(q, r.power, ops), d).hull());
}

RuleOutcome apply_diseq(const ReductionRule& r, DomainStore& store) {
  const PolynomialConstraint& c = *r.constraint;
  const auto& terms = c.lhs.terms();
  for (const Monomial& m : terms) {
    for (const auto& pe : m.powers) {
      if (pe.first != r.target && !store[pe.first].is_singleton()) {
        return {RuleStatus::Unchanged, r.target};
      }
    }
  }
  auto value = [&](const Monomial& m) {
    Integer v = m.coeff;
    for (const auto& [w, e] : m.powers) v *= pow(store[w].lo(), e);
    return v;
  };
  bool single = std::count_if(terms.begin(), terms.end(), [&](const Monomial& m) {
                  return exponent_of(m.powers, r.target) > 0;
                }) == 1;
  const IntegerInterval& d = store[r.target];
  if (single && r.power == 1 && r.divisor.powers.empty()) {
    // a * target != rhs - rest: trim the excluded value off a bound.
    Integer rest = c.rhs;
    for (uint32_t i = 0; i < terms.size(); ++i) {
      if (i != r.monomial) rest -= value(terms[i]);
    }
    if (!divides(r.divisor.coeff, rest)) return {RuleStatus::Unchanged, r.target};
    Integer excluded = floor_div(rest, r.divisor.coeff);
    if (d.is_singleton() && d.lo() == excluded) {
      return commit(store, r.target, IntegerInterval::empty());
    }
    if (d.has_lo() && d.lo() == excluded) {
      return commit(store, r.target,
                    intersect(d, IntegerInterval::at_least(excluded + Integer(1))));
    }
    if (d.has_hi() && d.hi() == excluded) {
      return commit(store, r.target,
                    intersect(d, IntegerInterval::at_most(excluded - Integer(1))));
    }
    return {RuleStatus::Unchanged, r.target};
  }
  if (!d.is_singleton()) return {RuleStatus::Unchanged, r.target};
  Integer lhs(0);
  for (const Monomial& m : terms) lhs += value(m);
  if (lhs == c.rhs) return commit(store, r.target, IntegerInterval::empty());
  return {RuleStatus::Unchanged, r.target};
}

}  // namespace

RuleOutcome apply_rule(const ReductionRule& r, DomainStore& store,
                       OpCounters* ops) {
  switch (r.kind) {
    case RuleKind::LinearEq:
    case RuleKind::LinearIneq:
    case RuleKind::PolyEq:
    case RuleKind::PolyEqOpt:
    case RuleKind::PolyIneq:
    case RuleKind::PolyIneqOpt:
      return apply_polynomial(r, store, ops);
    case RuleKind::Mult1:
      return commit(store, r.z,
                    intersect(store[r.z], mult_int(store[r.x], store[r.y], ops)));
    case RuleKind::Mult2:
      return commit(store, r.x,
                    intersect(store[r.x], div_int(store[r.z], store[r.y], ops)));
    case RuleKind::Mult3:
      return commit(store, r.y,
                    intersect(store[r.y], div_int(store[r.z], store[r.x], ops)));
    case RuleKind::Mult2w:
      return commit(store, r.x,
                    intersect(store[r.x], div_weak(store[r.z], store[r.y], ops)));
    case RuleKind::Mult3w:
      return commit(store, r.y,
                    intersect(store[r.y], div_weak(store[r.z], store[r.x], ops)));
    case RuleKind::Expo:
      return commit(store, r.x,
                    intersect(store[r.x], exp_int(store[r.y], r.n, ops)));
    case RuleKind::RootX:
      return commit(store, r.y,
                    intersect(root(store[r.x], r.n, ops), store[r.y]).hull());
    case RuleKind::Diseq:
      return apply_diseq(r, store);
  }
  throw std::logic_error("unknown rule kind");
}

// ============================================================================
// Bounds consistency
// ============================================================================

bool is_bounds_consistent(const IntegerInterval& dx, const IntegerInterval& dy,
                          const IntegerInterval& dz) {
  if (!dx.is_bounded() || !dy.is_bounded() || !dz.is_bounded()) {
    throw std::invalid_argument("bounds consistency needs bounded domains");
  }
  // For a fixed real a, {a * b : b in [ly, hy]} is a real interval with
  // integer endpoints, so overlap with [lz, hz] is decided on integers.
  auto extends = [&](const Integer& a, const IntegerInterval& other) {
    return !intersect(mult_int(IntegerInterval::point(a), other), dz).is_empty();
  };
  for (const Integer& a : {dx.lo(), dx.hi()}) {
    if (!extends(a, dy)) return false;
  }
  for (const Integer& b : {dy.lo(), dy.hi()}) {
    if (!extends(b, dx)) return false;
  }
  // The real product of two intervals is the interval between the extreme
  // endpoint products.
  IntegerInterval products = mult_int(dx, dy);
  return products.contains(dz.lo()) && products.contains(dz.hi());
}

}  // namespace icp
