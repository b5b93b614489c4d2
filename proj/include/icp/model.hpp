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

#ifndef ICP_MODEL_HPP_
#define ICP_MODEL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icp/expression.hpp"
#include "icp/interval.hpp"
#include "icp/polynomial.hpp"

namespace icp {

struct Variable {
  std::string name;
  IntegerInterval domain;
};

// A constraint as written, kept for exact verification of solutions.
struct SourceConstraint {
  Expr lhs;
  Comparison cmp;
  Expr rhs;
};

enum class Goal { All, Maximize };

// Integer constraint satisfaction problem over polynomial constraints.
// Variable ids follow declaration order, which is also the variable order
// used by decomposition and search.
struct Csp {
  std::vector<Variable> variables;
  std::vector<PolynomialConstraint> constraints;
  std::vector<SourceConstraint> sources;
  Goal goal = Goal::All;
  Expr objective;
  // Set when normalization found a constant constraint that never holds.
  bool infeasible = false;

  // Throws std::invalid_argument on a duplicate name.
  VarId add_variable(const std::string& name, const IntegerInterval& domain);
  void add_constraint(const Expr& lhs, Comparison cmp, const Expr& rhs);
  void maximize(const Expr& objective_expr);

  std::optional<VarId> find(std::string_view name) const;
  std::vector<std::string> names() const;
  // Problem text in the input language.
  std::string to_string() const;
};

// True when every source constraint holds exactly at the given point.
bool satisfies(const Csp& csp, const std::vector<Integer>& values);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Parses the problem language:
//   var x in [a..b];   var x in Z;
//   constraint expr cmp expr;      cmp is one of < <= = != >= >
//   solve all;   maximize expr;
// where `#` starts a comment to the end of the line.
Csp parse_problem(std::string_view text);
// Reads and parses a file; throws std::runtime_error if it cannot be read.
Csp parse_problem_file(const std::string& path);

}  // namespace icp

#endif  // ICP_MODEL_HPP_
