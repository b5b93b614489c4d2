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

#include <catch_amalgamated.hpp>

#include "icp/model.hpp"
#include "icp/polynomial.hpp"
#include "oracles.hpp"

namespace icp {
namespace {

using namespace expr;

TEST_CASE("normalize: canonical monomial order and constant side",
          "[model][normalize]") {
  // x=0, y=1, z=2
  Expr x = var(0), y = var(1), z = var(2);
  Expr lhs = sub(mul(mul(mul(lit(2), pow(x, 5)), pow(y, 2)), pow(z, 4)),
                 mul(mul(mul(lit(4), pow(x, 4)), pow(y, 6)), pow(z, 2)));
  Expr rhs = sub(lit(1), mul(mul(mul(lit(3), x), pow(y, 3)), pow(z, 5)));
  Normalized n = normalize(lhs, Comparison::Eq, rhs);
  REQUIRE(n.status == Normalized::Status::Constraint);
  const auto& t = n.constraint.lhs.terms();
  REQUIRE(t.size() == 3);
  CHECK(t[0] == Monomial{Integer(2), {{0, 5}, {1, 2}, {2, 4}}});
  CHECK(t[1] == Monomial{Integer(-4), {{0, 4}, {1, 6}, {2, 2}}});
  CHECK(t[2] == Monomial{Integer(3), {{0, 1}, {1, 3}, {2, 5}}});
  CHECK(n.constraint.rhs == Integer(1));
  CHECK(n.constraint.op == Relation::Eq);
  CHECK(n.constraint.to_string({"x", "y", "z"}) ==
        "2*x^5*y^2*z^4 - 4*x^4*y^6*z^2 + 3*x*y^3*z^5 = 1");
}

TEST_CASE("normalize: strict and reversed comparisons", "[model][normalize]") {
  Expr x = var(0);
  auto check = [&](Comparison cmp, long coeff, long rhs) {
    Normalized n = normalize(x, cmp, lit(5));
    REQUIRE(n.status == Normalized::Status::Constraint);
    CHECK(n.constraint.op == Relation::Leq);
    CHECK(n.constraint.lhs.terms()[0].coeff == Integer(coeff));
    CHECK(n.constraint.rhs == Integer(rhs));
  };
  check(Comparison::Lt, 1, 4);
  check(Comparison::Leq, 1, 5);
  check(Comparison::Gt, -1, -6);
  check(Comparison::Geq, -1, -5);
  CHECK(normalize(sub(x, x), Comparison::Eq, lit(0)).status ==
        Normalized::Status::Trivial);
  CHECK(normalize(sub(x, x), Comparison::Eq, lit(1)).status ==
        Normalized::Status::Infeasible);
  CHECK(normalize(lit(0), Comparison::Leq, lit(-1)).status ==
        Normalized::Status::Infeasible);
  CHECK(normalize(lit(3), Comparison::Neq, lit(2)).status ==
        Normalized::Status::Trivial);
  CHECK_THROWS_AS(normalize(div(x, lit(2)), Comparison::Eq, lit(1)),
                  std::invalid_argument);
}

// Random polynomial expressions over three variables.
Expr random_expr(testing::Rng& rng, int depth) {
  long pick = testing::uniform(rng, 0, depth <= 0 ? 1 : 6);
  switch (pick) {
    case 0:
      return lit(Integer(testing::uniform(rng, -5, 5)));
    case 1:
      return var(static_cast<VarId>(testing::uniform(rng, 0, 2)));
    case 2:
      return add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3:
      return sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 4:
      return mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5:
      return neg(random_expr(rng, depth - 1));
    default:
      return pow(random_expr(rng, depth - 1),
                 static_cast<unsigned>(testing::uniform(rng, 1, 3)));
  }
}

bool holds(const Integer& l, Comparison cmp, const Integer& r) {
  switch (cmp) {
    case Comparison::Lt: return l < r;
    case Comparison::Leq: return l <= r;
    case Comparison::Eq: return l == r;
    case Comparison::Neq: return l != r;
    case Comparison::Geq: return l >= r;
    case Comparison::Gt: return l > r;
  }
  return false;
}

TEST_CASE("normalize: preserves solution sets and is idempotent",
          "[model][normalize][property]") {
  testing::Rng rng(31);
  const Comparison kCmps[] = {Comparison::Lt,  Comparison::Leq, Comparison::Eq,
                              Comparison::Neq, Comparison::Geq, Comparison::Gt};
  for (int i = 0; i < 1000; ++i) {
    Expr lhs = random_expr(rng, 3), rhs = random_expr(rng, 2);
    Comparison cmp = kCmps[testing::uniform(rng, 0, 5)];
    Normalized n = normalize(lhs, cmp, rhs);
    INFO(to_string(lhs, {"x", "y", "z"}) << " " << to_string(cmp) << " "
                                         << to_string(rhs, {"x", "y", "z"}));
    for (long a = -2; a <= 2; ++a) {
      for (long b = -2; b <= 2; ++b) {
        for (long c = -2; c <= 2; ++c) {
          std::vector<Integer> pt = {Integer(a), Integer(b), Integer(c)};
          bool expected = holds(*evaluate(lhs, pt), cmp, *evaluate(rhs, pt));
          bool got = n.status == Normalized::Status::Trivial;
          if (n.status == Normalized::Status::Constraint) {
            ConstraintExprs e = to_exprs(n.constraint);
            got = holds(*evaluate(e.lhs, pt), e.cmp, *evaluate(e.rhs, pt));
          }
          CHECK(got == expected);
        }
      }
    }
    if (n.status == Normalized::Status::Constraint) {
      ConstraintExprs e = to_exprs(n.constraint);
      Normalized again = normalize(e.lhs, e.cmp, e.rhs);
      REQUIRE(again.status == Normalized::Status::Constraint);
      CHECK(again.constraint == n.constraint);
    }
  }
}

TEST_CASE("parser: declarations, constraints and goals", "[model][parser]") {
  Csp csp = parse_problem(R"(
    # the running example
    var x in [1..100];
    var y in [1..100];
    var w in Z;
    constraint x^3*y - x <= 40;   # trailing comment
    constraint -w + 2*(x - 1) > -7;
    maximize y;
  )");
  REQUIRE(csp.variables.size() == 3);
  CHECK(csp.variables[0].name == "x");
  CHECK(csp.variables[2].domain == IntegerInterval::all());
  REQUIRE(csp.constraints.size() == 2);
  CHECK(csp.constraints[0].to_string(csp.names()) == "x^3*y - x <= 40");
  CHECK(csp.constraints[1].to_string(csp.names()) == "-2*x + w <= 4");
  CHECK(csp.goal == Goal::Maximize);
  CHECK(to_string(csp.objective, csp.names()) == "y");
  CHECK(satisfies(csp, {Integer(1), Integer(41), Integer(0)}));
  CHECK(!satisfies(csp, {Integer(1), Integer(42), Integer(0)}));

  Csp again = parse_problem(csp.to_string());
  CHECK(again.constraints == csp.constraints);
  CHECK(again.names() == csp.names());
}

TEST_CASE("parser: errors carry line and column", "[model][parser]") {
  auto error_at = [](const char* text, int line, int column) {
    try {
      parse_problem(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      INFO(e.what());
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  error_at("var x in [1..2];\nvar x in [1..2];", 2, 5);
  error_at("var x in [1..2];\nconstraint x^0 = 1;", 2, 14);
  error_at("var x in [1..2];\nconstraint y = 1;", 2, 12);
  error_at("var x in [1..2]\nconstraint x = 1;", 2, 1);
  error_at("var x in [1..2];\nconstraint x = 1 $;", 2, 18);
  error_at("var x in [1..2];\nsolve all;\nmaximize x;", 3, 1);
  CHECK_THROWS_AS(parse_problem_file("/nonexistent/problem.txt"),
                  std::runtime_error);
}

TEST_CASE("parser: constant constraints", "[model][parser]") {
  Csp ok = parse_problem("var x in [1..2]; constraint x - x = 0;");
  CHECK(ok.constraints.empty());
  CHECK(!ok.infeasible);
  Csp bad = parse_problem("var x in [1..2]; constraint 1 = 2;");
  CHECK(bad.infeasible);
}

}  // namespace
}  // namespace icp
