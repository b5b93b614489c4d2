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

#include "icp/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace icp {

// ============================================================================
// Power products
// ============================================================================

unsigned degree(const PowerProduct& p) {
  unsigned d = 0;
  for (const auto& [v, e] : p) d += e;
  return d;
}

unsigned exponent_of(const PowerProduct& p, VarId v) {
  for (const auto& [w, e] : p) {
    if (w == v) return e;
  }
  return 0;
}

PowerProduct multiply(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool divides(const PowerProduct& a, const PowerProduct& b) {
  for (const auto& [v, e] : a) {
    if (exponent_of(b, v) < e) return false;
  }
  return true;
}

PowerProduct quotient(const PowerProduct& b, const PowerProduct& a) {
  PowerProduct out;
  for (const auto& [v, e] : b) {
    unsigned k = exponent_of(a, v);
    if (k > e) throw std::invalid_argument("power product does not divide");
    if (e > k) out.emplace_back(v, e - k);
  }
  return out;
}

bool lex_before(const PowerProduct& a, const PowerProduct& b) {
  constexpr VarId kNone = std::numeric_limits<VarId>::max();
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    VarId va = i < a.size() ? a[i].first : kNone;
    VarId vb = j < b.size() ? b[j].first : kNone;
    VarId v = std::min(va, vb);
    unsigned ea = va == v ? a[i].second : 0;
    unsigned eb = vb == v ? b[j].second : 0;
    if (ea != eb) return ea > eb;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return false;
}

// ============================================================================
// Polynomial
// ============================================================================

Polynomial Polynomial::constant(const Integer& c) {
  return from_terms({Monomial{c, {}}});
}

Polynomial Polynomial::variable(VarId v) {
  return from_terms({Monomial{Integer(1), {{v, 1}}}});
}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Monomial& a, const Monomial& b) {
                     return lex_before(a.powers, b.powers);
                   });
  Polynomial p;
  for (Monomial& m : terms) {
    if (!p.terms_.empty() && p.terms_.back().powers == m.powers) {
      p.terms_.back().coeff += m.coeff;
    } else {
      p.terms_.push_back(std::move(m));
    }
  }
  std::erase_if(p.terms_, [](const Monomial& m) { return m.coeff.is_zero(); });
  return p;
}

Polynomial Polynomial::from_ordered_terms(std::vector<Monomial> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_expr(const Expr& e) {
  switch (e->kind) {
    case ExprKind::Var:
      return variable(e->var);
    case ExprKind::IntLit:
      return constant(e->value);
    case ExprKind::Neg:
      return -from_expr(e->lhs);
    case ExprKind::Add:
      return from_expr(e->lhs) + from_expr(e->rhs);
    case ExprKind::Sub:
      return from_expr(e->lhs) - from_expr(e->rhs);
    case ExprKind::Mul:
      return from_expr(e->lhs) * from_expr(e->rhs);
    case ExprKind::Pow:
      return from_expr(e->lhs).pow(e->exponent);
    case ExprKind::Root:
    case ExprKind::Div:
      break;
  }
  throw std::invalid_argument("expression is not a polynomial");
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().powers.empty()) {
    return terms_.back().coeff;
  }
  return Integer(0);
}

Polynomial Polynomial::without_constant() const {
  Polynomial p = *this;
  if (!p.terms_.empty() && p.terms_.back().powers.empty()) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_linear() const {
  for (const Monomial& m : terms_) {
    if (degree(m.powers) > 1) return false;
  }
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Monomial> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::from_terms(std::move(terms));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Monomial> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Monomial& x : a.terms_) {
    for (const Monomial& y : b.terms_) {
      terms.push_back({x.coeff * y.coeff, multiply(x.powers, y.powers)});
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Monomial& m : p.terms_) m.coeff = -m.coeff;
  return p;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(Integer(1));
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

namespace {

Expr monomial_expr(const Integer& abs_coeff, const PowerProduct& powers) {
  Expr e;
  if (!abs_coeff.is_one() || powers.empty()) e = expr::lit(abs_coeff);
  for (const auto& [v, k] : powers) {
    Expr f = k == 1 ? expr::var(v) : expr::pow(expr::var(v), k);
    e = e ? expr::mul(e, f) : f;
  }
  return e;
}

}  // namespace

Expr Polynomial::to_expr() const {
  if (terms_.empty()) return expr::lit(Integer(0));
  Expr e;
  for (const Monomial& m : terms_) {
    Expr t = monomial_expr(abs(m.coeff), m.powers);
    if (!e) {
      e = m.coeff.sign() < 0 ? expr::neg(t) : t;
    } else {
      e = m.coeff.sign() < 0 ? expr::sub(e, t) : expr::add(e, t);
    }
  }
  return e;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  return icp::to_string(to_expr(), names);
}

// ============================================================================
// Constraints
// ============================================================================

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Lt:
      return "<";
    case Comparison::Leq:
      return "<=";
    case Comparison::Eq:
      return "=";
    case Comparison::Neq:
      return "!=";
    case Comparison::Geq:
      return ">=";
    case Comparison::Gt:
      return ">";
  }
  return "?";
}

std::string PolynomialConstraint::to_string(
    const std::vector<std::string>& names) const {
  const char* rel = op == Relation::Eq ? " = " : op == Relation::Leq ? " <= " : " != ";
  return lhs.to_string(names) + rel + rhs.str();
}

Normalized normalize(const Expr& lhs, Comparison cmp, const Expr& rhs) {
  Polynomial p = Polynomial::from_expr(lhs) - Polynomial::from_expr(rhs);
  Integer b = -p.constant_term();
  Polynomial s = p.without_constant();
  Normalized out;
  Relation op = Relation::Eq;
  switch (cmp) {
    case Comparison::Eq:
      op = Relation::Eq;
      break;
    case Comparison::Neq:
      op = Relation::Neq;
      break;
    case Comparison::Leq:
      op = Relation::Leq;
      break;
    case Comparison::Lt:
      op = Relation::Leq;
      b = b - Integer(1);
      break;
    case Comparison::Geq:
      op = Relation::Leq;
      s = -s;
      b = -b;
      break;
    case Comparison::Gt:
      op = Relation::Leq;
      s = -s;
      b = -b - Integer(1);
      break;
  }
  if (s.is_zero()) {
    bool holds = op == Relation::Eq    ? b.is_zero()
                 : op == Relation::Leq ? b.sign() >= 0
                                       : !b.is_zero();
    out.status = holds ? Normalized::Status::Trivial
                       : Normalized::Status::Infeasible;
    return out;
  }
  out.constraint = PolynomialConstraint{std::move(s), op, std::move(b)};
  return out;
}

ConstraintExprs to_exprs(const PolynomialConstraint& c) {
  Comparison cmp = c.op == Relation::Eq    ? Comparison::Eq
                   : c.op == Relation::Leq ? Comparison::Leq
                                           : Comparison::Neq;
  return {c.lhs.to_expr(), cmp, expr::lit(c.rhs)};
}

}  // namespace icp
