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

#ifndef ICP_POLYNOMIAL_HPP_
#define ICP_POLYNOMIAL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "icp/expression.hpp"
#include "icp/integer.hpp"

namespace icp {

// Variables with positive exponents, sorted by id. Empty means the constant 1.
using PowerProduct = std::vector<std::pair<VarId, unsigned>>;

unsigned degree(const PowerProduct& p);
unsigned exponent_of(const PowerProduct& p, VarId v);
PowerProduct multiply(const PowerProduct& a, const PowerProduct& b);
bool divides(const PowerProduct& a, const PowerProduct& b);
// b / a; requires divides(a, b).
PowerProduct quotient(const PowerProduct& b, const PowerProduct& a);
// Lexicographic order on exponent vectors, variables taken by ascending id
// and larger exponents first. This is the canonical monomial order.
bool lex_before(const PowerProduct& a, const PowerProduct& b);

struct Monomial {
  Integer coeff;
  PowerProduct powers;

  // Nonlinear: degree two or more.
  bool is_nonlinear() const { return degree(powers) >= 2; }
  bool operator==(const Monomial&) const = default;
};

// Sum of monomials with distinct power products and nonzero coefficients,
// kept in canonical order unless built with from_ordered_terms.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Integer& c);
  static Polynomial variable(VarId v);
  // Expands an expression; throws std::invalid_argument on Root or Div.
  static Polynomial from_expr(const Expr& e);
  // Builds from arbitrary terms, merging equal power products.
  static Polynomial from_terms(std::vector<Monomial> terms);
  // Keeps the given term order. Power products must be distinct and the
  // coefficients nonzero.
  static Polynomial from_ordered_terms(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer constant_term() const;
  Polynomial without_constant() const;
  bool is_linear() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(unsigned n) const;
  bool operator==(const Polynomial&) const = default;

  Expr to_expr() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Monomial> terms_;
};

enum class Comparison { Lt, Leq, Eq, Neq, Geq, Gt };
enum class Relation { Eq, Leq, Neq };

const char* to_string(Comparison c);

// lhs op rhs with a constant-free, nonzero polynomial lhs.
struct PolynomialConstraint {
  Polynomial lhs;
  Relation op = Relation::Eq;
  Integer rhs;

  bool operator==(const PolynomialConstraint&) const = default;
  std::string to_string(const std::vector<std::string>& names) const;
};

struct Normalized {
  enum class Status { Constraint, Trivial, Infeasible };
  Status status = Status::Constraint;
  PolynomialConstraint constraint;  // meaningful for Status::Constraint
};

// Moves everything to the left, collects constants on the right and rewrites
// <, >, >= into <= forms.
Normalized normalize(const Expr& lhs, Comparison cmp, const Expr& rhs);

// The constraint as an expression triple, suitable for normalize().
struct ConstraintExprs {
  Expr lhs;
  Comparison cmp;
  Expr rhs;
};
ConstraintExprs to_exprs(const PolynomialConstraint& c);

}  // namespace icp

#endif  // ICP_POLYNOMIAL_HPP_
