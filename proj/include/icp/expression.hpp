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

#ifndef ICP_EXPRESSION_HPP_
#define ICP_EXPRESSION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icp/integer.hpp"

namespace icp {

using VarId = uint32_t;

enum class ExprKind { Var, IntLit, Neg, Add, Sub, Mul, Pow, Root, Div };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

// Immutable arithmetic expression tree over integer variables.
struct ExprNode {
  ExprKind kind;
  VarId var = 0;           // Var
  Integer value;           // IntLit
  unsigned exponent = 0;   // Pow, Root
  Expr lhs;                // unary operand or left operand
  Expr rhs;                // right operand of Add, Sub, Mul, Div
};

namespace expr {

Expr var(VarId id);
Expr lit(const Integer& v);
Expr neg(Expr e);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr pow(Expr e, unsigned n);
Expr root(Expr e, unsigned n);
Expr div(Expr a, Expr b);

}  // namespace expr

// Renders with the given variable names; ids without a name print as v<id>.
std::string to_string(const Expr& e, const std::vector<std::string>& names);

// Exact value at a point, or nullopt when a root or division has no integer
// result.
std::optional<Integer> evaluate(const Expr& e,
                                const std::vector<Integer>& values);

// Ids of the variables occurring in e, ascending and without duplicates.
std::vector<VarId> variables_of(const Expr& e);

}  // namespace icp

#endif  // ICP_EXPRESSION_HPP_
