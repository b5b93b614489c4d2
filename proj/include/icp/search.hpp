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

#ifndef ICP_SEARCH_HPP_
#define ICP_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "icp/decompose.hpp"
#include "icp/engine.hpp"

namespace icp {

struct SearchConfig {
  Variant variant = Variant::DU;
  DivisionMode division = DivisionMode::Weak;
  ScheduleMode schedule = ScheduleMode::Scheduled;
  uint64_t max_nodes = 0;  // 0: no limit
  bool keep_solutions = true;
};

struct SearchStats {
  size_t nvar = 0;
  size_t ndrf = 0;
  uint64_t nodes = 0;  // every node, including failures and solutions
  uint64_t solutions = 0;
  uint64_t drf_applications = 0;
  uint64_t drf_effective = 0;
  OpCounters ops;
  bool complete = true;  // false when the node limit cut the search short
  double elapsed_seconds = 0;

  double percent_effective() const {
    return drf_applications == 0
               ? 0.0
               : 100.0 * static_cast<double>(drf_effective) /
                     static_cast<double>(drf_applications);
  }
};

struct SearchResult {
  // Values of the user variables, in declaration order.
  std::vector<std::vector<Integer>> solutions;
  // Maximization: objective values of the successive incumbents, and the
  // last (best) solution.
  std::vector<Integer> incumbents;
  std::optional<std::vector<Integer>> best;
  SearchStats stats;
};

class UnboundedDomainError : public std::runtime_error {
 public:
  UnboundedDomainError(VarId var, const std::string& name)
      : std::runtime_error("domain of '" + name +
                           "' is unbounded after propagation"),
        var_(var) {}
  VarId var() const { return var_; }

 private:
  VarId var_;
};

// Depth-first search with bisection, propagating at every node. Variables are
// branched in declaration order, auxiliaries after user variables; the
// objective variable is never branched on.
SearchResult solve_all(const Csp& csp, const SearchConfig& config);
// Branch and bound: each solution with objective value v restricts the rest
// of the search to values of at least v + 1.
SearchResult maximize(const Csp& csp, const SearchConfig& config);
// Dispatches on the problem goal.
SearchResult solve(const Csp& csp, const SearchConfig& config);

// Exact evaluation of the original constraints.
bool verify_solution(const Csp& csp, const std::vector<Integer>& values);

}  // namespace icp

#endif  // ICP_SEARCH_HPP_
