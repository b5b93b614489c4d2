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

#ifndef ICP_RULES_HPP_
#define ICP_RULES_HPP_

#include <memory>
#include <string>
#include <vector>

#include "icp/expression.hpp"
#include "icp/interval.hpp"
#include "icp/polynomial.hpp"
#include "icp/rational.hpp"

namespace icp {

using DomainStore = std::vector<IntegerInterval>;

enum class RuleKind {
  LinearEq,
  LinearIneq,
  PolyEq,
  PolyEqOpt,
  PolyIneq,
  PolyIneqOpt,
  Mult1,
  Mult2,
  Mult3,
  Mult2w,
  Mult3w,
  Expo,
  RootX,
  Diseq,
};

const char* to_string(RuleKind k);

enum class DivisionMode { Weak, Strong };

// Numerators sharing one denominator c * t after dividing a term by the
// divisor of an optimized polynomial rule.
struct FractionGroup {
  Monomial denominator;
  std::vector<Monomial> numerators;
};

// A domain reduction function: narrows the domain of `target` using the
// domains of the variables in `reads`. The target is listed in `reads` only
// when its own domain influences the result beyond plain intersection.
struct ReductionRule {
  RuleKind kind = RuleKind::LinearEq;
  VarId target = 0;
  std::vector<VarId> reads;

  // Linear, polynomial and disequality rules.
  std::shared_ptr<const PolynomialConstraint> constraint;
  uint32_t monomial = 0;  // monomial holding the target occurrence
  unsigned power = 1;     // exponent of the target in that monomial
  Monomial divisor;       // that monomial with the target power removed
  std::vector<FractionGroup> groups;  // optimized rules only

  // x * y = z and x = y^n.
  VarId x = 0;
  VarId y = 0;
  VarId z = 0;
  unsigned n = 0;

  std::string describe(const std::vector<std::string>& names) const;
};

enum class RuleStatus { Unchanged, Reduced, Failed };

struct RuleOutcome {
  RuleStatus status = RuleStatus::Unchanged;
  VarId var = 0;  // the target, for Reduced and Failed
};

// One rule per variable occurrence. Linear constraints get linear rules,
// disequalities get Diseq rules, and nonlinear constraints get polynomial
// rules, optimized ones when requested.
std::vector<ReductionRule> rules_for_constraint(
    std::shared_ptr<const PolynomialConstraint> c, bool optimized);
// Rules for x * y = z: Mult1 (writes z), Mult2 (writes x), Mult3 (writes y).
// With x == y the Mult3 rule coincides with Mult2 and is omitted.
std::vector<ReductionRule> rules_for_product(VarId x, VarId y, VarId z,
                                             DivisionMode mode);
// Rules for x = y^n: Expo (writes x) and RootX (writes y).
std::vector<ReductionRule> rules_for_power(VarId x, VarId y, unsigned n);

RuleOutcome apply_rule(const ReductionRule& rule, DomainStore& store,
                       OpCounters* ops = nullptr);

// Interval value of a monomial over the store.
IntegerInterval eval_monomial(const Monomial& m, const DomainStore& store,
                              OpCounters* ops = nullptr);
// Interval evaluation of an extended arithmetic expression (int(s)).
IntegerInterval eval_int(const Expr& e, const DomainStore& store,
                         OpCounters* ops = nullptr);

// Real bounds consistency of x * y = z over non-empty bounded domains: every
// bound of each domain extends to a real solution within the other domains.
bool is_bounds_consistent(const IntegerInterval& dx, const IntegerInterval& dy,
                          const IntegerInterval& dz);

}  // namespace icp

#endif  // ICP_RULES_HPP_
