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

#include "icp/search.hpp"

#include <chrono>

namespace icp {

bool verify_solution(const Csp& csp, const std::vector<Integer>& values) {
  return values.size() >= csp.variables.size() && satisfies(csp, values);
}

namespace {

struct NodeLimitReached {};

class Search {
 public:
  Search(const Csp& csp, const SearchConfig& config)
      : csp_(csp),
        config_(config),
        d_(decompose(csp, config.variant, config.division)),
        prop_(d_, config.schedule) {
    for (VarId v = 0; v < d_.user_vars; ++v) branch_order_.push_back(v);
    for (VarId v = d_.first_aux(); v < d_.csp.variables.size(); ++v) {
      branch_order_.push_back(v);
    }
  }

  SearchResult run() {
    auto start = std::chrono::steady_clock::now();
    DomainStore store = initial_store(d_);
    prop_.mark_all_pending();
    try {
      node(store);
    } catch (const NodeLimitReached&) {
      result_.stats.complete = false;
    }
    SearchStats& s = result_.stats;
    s.nvar = d_.csp.variables.size();
    s.ndrf = d_.rules.size();
    s.drf_applications = prop_.applications();
    s.drf_effective = prop_.effective();
    s.ops = prop_.ops();
    s.elapsed_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return std::move(result_);
  }

 private:
  void node(DomainStore& store) {
    if (config_.max_nodes > 0 && result_.stats.nodes >= config_.max_nodes) {
      throw NodeLimitReached{};
    }
    ++result_.stats.nodes;
    if (d_.objective && bound_) {
      VarId o = *d_.objective;
      IntegerInterval next =
          intersect(store[o], IntegerInterval::at_least(*bound_ + Integer(1)));
      if (next.is_empty()) return;
      if (next != store[o]) {
        store[o] = std::move(next);
        prop_.note_change(o);
      }
    }
    if (!prop_.propagate(store).ok()) return;

    for (VarId v : branch_order_) {
      const IntegerInterval& dom = store[v];
      if (dom.is_singleton()) continue;
      if (!dom.is_bounded()) {
        throw UnboundedDomainError(v, d_.csp.variables[v].name);
      }
      Integer mid = floor_div(dom.lo() + dom.hi(), Integer(2));
      IntegerInterval halves[2] = {IntegerInterval::bounded(dom.lo(), mid),
                                   IntegerInterval::bounded(mid + Integer(1), dom.hi())};
      for (IntegerInterval& half : halves) {
        DomainStore child = store;
        child[v] = std::move(half);
        prop_.clear_pending();
        prop_.note_change(v);
        node(child);
      }
      return;
    }
    record(store);
  }

  void record(const DomainStore& store) {
    std::vector<Integer> values;
    for (VarId v = 0; v < d_.user_vars; ++v) values.push_back(store[v].lo());
    if (!verify_solution(csp_, values)) return;
    ++result_.stats.solutions;
    if (d_.objective) {
      std::optional<Integer> value = evaluate(csp_.objective, values);
      if (value) {
        bound_ = *value;
        result_.incumbents.push_back(*value);
      }
      result_.best = values;
    }
    if (config_.keep_solutions) result_.solutions.push_back(std::move(values));
  }

  const Csp& csp_;
  const SearchConfig& config_;
  Decomposed d_;
  Propagator prop_;
  std::vector<VarId> branch_order_;
  std::optional<Integer> bound_;
  SearchResult result_;
};

}  // namespace

SearchResult solve_all(const Csp& csp, const SearchConfig& config) {
  Csp all = csp;
  all.goal = Goal::All;
  return Search(all, config).run();
}

SearchResult maximize(const Csp& csp, const SearchConfig& config) {
  if (csp.goal != Goal::Maximize || !csp.objective) {
    throw std::invalid_argument("problem has no objective to maximize");
  }
  return Search(csp, config).run();
}

SearchResult solve(const Csp& csp, const SearchConfig& config) {
  return csp.goal == Goal::Maximize ? maximize(csp, config)
                                    : solve_all(csp, config);
}

}  // namespace icp
