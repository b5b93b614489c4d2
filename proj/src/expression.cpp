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

#include "icp/expression.hpp"

#include <algorithm>
#include <functional>

namespace icp {
namespace expr {

namespace {

Expr make(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }

}  // namespace

Expr var(VarId id) { return make({ExprKind::Var, id, {}, 0, nullptr, nullptr}); }
Expr lit(const Integer& v) {
  return make({ExprKind::IntLit, 0, v, 0, nullptr, nullptr});
}
Expr neg(Expr e) { return make({ExprKind::Neg, 0, {}, 0, std::move(e), nullptr}); }
Expr add(Expr a, Expr b) {
  return make({ExprKind::Add, 0, {}, 0, std::move(a), std::move(b)});
}
Expr sub(Expr a, Expr b) {
  return make({ExprKind::Sub, 0, {}, 0, std::move(a), std::move(b)});
}
Expr mul(Expr a, Expr b) {
  return make({ExprKind::Mul, 0, {}, 0, std::move(a), std::move(b)});
}
Expr pow(Expr e, unsigned n) {
  return make({ExprKind::Pow, 0, {}, n, std::move(e), nullptr});
}
Expr root(Expr e, unsigned n) {
  return make({ExprKind::Root, 0, {}, n, std::move(e), nullptr});
}
Expr div(Expr a, Expr b) {
  return make({ExprKind::Div, 0, {}, 0, std::move(a), std::move(b)});
}

}  // namespace expr

namespace {

int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string render(const Expr& e, const std::vector<std::string>& names,
                   int parent) {
  std::string s;
  switch (e->kind) {
    case ExprKind::Var:
      s = e->var < names.size() ? names[e->var] : "v" + std::to_string(e->var);
      break;
    case ExprKind::IntLit:
      s = e->value.str();
      if (e->value.sign() < 0) s = "(" + s + ")";
      break;
    case ExprKind::Neg:
      // Negation distributes over products, so "-2*x" reads back equal.
      s = "-" + render(e->lhs, names, e->lhs->kind == ExprKind::Neg ? 4 : 2);
      break;
    case ExprKind::Add:
      s = render(e->lhs, names, 1) + " + " + render(e->rhs, names, 2);
      break;
    case ExprKind::Sub:
      s = render(e->lhs, names, 1) + " - " + render(e->rhs, names, 2);
      break;
    case ExprKind::Mul:
      s = render(e->lhs, names, 2) + "*" + render(e->rhs, names, 3);
      break;
    case ExprKind::Div:
      s = render(e->lhs, names, 2) + "/" + render(e->rhs, names, 3);
      break;
    case ExprKind::Pow:
      s = render(e->lhs, names, 5) + "^" + std::to_string(e->exponent);
      break;
    case ExprKind::Root:
      s = "root" + std::to_string(e->exponent) + "(" +
          render(e->lhs, names, 0) + ")";
      break;
  }
  if (precedence(e->kind) < parent) s = "(" + s + ")";
  return s;
}

}  // namespace

std::string to_string(const Expr& e, const std::vector<std::string>& names) {
  return render(e, names, 0);
}

std::optional<Integer> evaluate(const Expr& e,
                                const std::vector<Integer>& values) {
  switch (e->kind) {
    case ExprKind::Var:
      return values.at(e->var);
    case ExprKind::IntLit:
      return e->value;
    case ExprKind::Neg: {
      auto v = evaluate(e->lhs, values);
      if (!v) return std::nullopt;
      return -*v;
    }
    case ExprKind::Pow: {
      auto v = evaluate(e->lhs, values);
      if (!v) return std::nullopt;
      return pow(*v, e->exponent);
    }
    case ExprKind::Root: {
      auto v = evaluate(e->lhs, values);
      if (!v) return std::nullopt;
      if (e->exponent % 2 == 0 && v->sign() < 0) return std::nullopt;
      Integer r = floor_root(*v, e->exponent);
      if (pow(r, e->exponent) != *v) return std::nullopt;
      return r;
    }
    default:
      break;
  }
  auto a = evaluate(e->lhs, values);
  auto b = evaluate(e->rhs, values);
  if (!a || !b) return std::nullopt;
  switch (e->kind) {
    case ExprKind::Add:
      return *a + *b;
    case ExprKind::Sub:
      return *a - *b;
    case ExprKind::Mul:
      return *a * *b;
    case ExprKind::Div:
      if (b->is_zero() || !divides(*b, *a)) return std::nullopt;
      return floor_div(*a, *b);
    default:
      return std::nullopt;
  }
}

std::vector<VarId> variables_of(const Expr& e) {
  std::vector<VarId> out;
  std::function<void(const Expr&)> walk = [&](const Expr& n) {
    if (!n) return;
    if (n->kind == ExprKind::Var) out.push_back(n->var);
    walk(n->lhs);
    walk(n->rhs);
  };
  walk(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace icp
