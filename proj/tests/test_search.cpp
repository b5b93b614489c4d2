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

#include <algorithm>

#include "icp/benchmarks.hpp"
#include "icp/search.hpp"
#include "random_csp.hpp"

namespace icp {
namespace {

using testing::Rng;
using Solutions = std::vector<std::vector<Integer>>;

std::vector<Integer> V(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Solutions sorted(Solutions s) {
  std::sort(s.begin(), s.end());
  return s;
}

TEST_CASE("solve_all: small problems", "[search]") {
  Csp csp = parse_problem("var x in [1..2]; var y in [1..2]; constraint x*y = 4;");
  for (Variant v : kAllVariants) {
    SearchResult r = solve_all(csp, {.variant = v});
    CHECK(r.solutions == Solutions{V({2, 2})});
    CHECK(r.stats.solutions == 1);
    CHECK(r.stats.complete);
    CHECK(r.stats.drf_effective <= r.stats.drf_applications);
  }
  Csp none = parse_problem("var x in [1..5]; constraint x*x = 7;");
  SearchResult r = solve_all(none, {});
  CHECK(r.solutions.empty());
  CHECK(r.stats.nodes >= 1);
  Csp infeasible = parse_problem("var x in [1..5]; constraint x - x = 1;");
  CHECK(solve_all(infeasible, {}).solutions.empty());
}

TEST_CASE("solve_all: node accounting", "[search]") {
  // No constraints: a full binary tree over four values.
  Csp csp = parse_problem("var x in [1..4];");
  SearchResult r = solve_all(csp, {});
  CHECK(r.solutions.size() == 4);
  CHECK(r.stats.nodes == 7);
  CHECK(r.solutions.front() == V({1}));
  SearchResult cut = solve_all(csp, {.max_nodes = 3});
  CHECK(!cut.stats.complete);
  CHECK(cut.stats.nodes == 3);
}

TEST_CASE("solve_all: unbounded user variable", "[search]") {
  Csp csp = parse_problem("var x in Z; var y in [1..3]; constraint x >= y;");
  CHECK_THROWS_AS(solve_all(csp, {}), UnboundedDomainError);
}

TEST_CASE("maximize: examples", "[search]") {
  Csp csp = parse_problem("var x in [1..10]; maximize x;");
  SearchResult r = maximize(csp, {});
  REQUIRE(r.best);
  CHECK(*r.best == V({10}));

  Csp running = parse_problem(
      "var x in [1..100]; var y in [1..100]; constraint x^3*y - x <= 40;"
      "maximize y;");
  for (Variant v : kAllVariants) {
    SearchResult m = maximize(running, {.variant = v});
    REQUIRE(m.best);
    CHECK(*m.best == V({1, 41}));
    CHECK(std::is_sorted(m.incumbents.begin(), m.incumbents.end()));
    CHECK(std::adjacent_find(m.incumbents.begin(), m.incumbents.end()) ==
          m.incumbents.end());
    CHECK(m.incumbents.back() == Integer(41));
  }
  Csp empty = parse_problem("var x in [1..3]; constraint x > 5; maximize x;");
  CHECK(!maximize(empty, {}).best);
  CHECK_THROWS_AS(maximize(parse_problem("var x in [1..3];"), {}),
                  std::invalid_argument);
}

TEST_CASE("verify_solution", "[search]") {
  Csp cubes = build_benchmark({"cubes", 0});
  CHECK(verify_solution(cubes, V({1, 2, 3, 4, 100})));
  CHECK(!verify_solution(cubes, V({1, 2, 3, 4, 99})));
  Csp csp = parse_problem("var x in [1..2]; var y in [1..2]; constraint x*y = 4;");
  CHECK(verify_solution(csp, V({2, 2})));
  CHECK(!verify_solution(csp, V({1, 1})));
}

// Non-decreasing sequences over [1..n] with the sum and product of 1..n.
Solutions sumprod_oracle(long n) {
  Integer sum(n * (n + 1) / 2), prod(1);
  for (long i = 1; i <= n; ++i) prod *= Integer(i);
  Solutions out;
  std::vector<Integer> xs;
  std::function<void(long, Integer, Integer)> rec = [&](long from, Integer s,
                                                        Integer p) {
    if (static_cast<long>(xs.size()) == n) {
      if (s == sum && p == prod) {
        std::vector<Integer> full = xs;
        for (long i = 1; i <= n; ++i) full.emplace_back(i);
        out.push_back(full);
      }
      return;
    }
    for (long x = from; x <= n; ++x) {
      if (s + Integer(x) > sum) break;
      xs.emplace_back(x);
      rec(x, s + Integer(x), p * Integer(x));
      xs.pop_back();
    }
  };
  rec(1, Integer(0), Integer(1));
  return out;
}

TEST_CASE("solve_all: sumprod agrees with enumeration", "[search]") {
  for (long n : {6, 8, 9}) {
    Csp csp = build_benchmark({"sumprod", n});
    Solutions expected = sumprod_oracle(n);
    for (Variant v : kAllVariants) {
      INFO(n << " " << to_string(v));
      CHECK(sorted(solve_all(csp, {.variant = v}).solutions) == expected);
    }
  }
}

TEST_CASE("solve_all: variants agree with brute force", "[search][property]") {
  Rng rng(11);
  int with_solutions = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Csp csp = testing::random_csp(rng, 4);
    Solutions expected = sorted(testing::brute_force(csp));
    with_solutions += !expected.empty();
    for (Variant v : kAllVariants) {
      for (DivisionMode dm : {DivisionMode::Weak, DivisionMode::Strong}) {
        for (ScheduleMode sm : {ScheduleMode::Cycle, ScheduleMode::Scheduled}) {
          SearchResult r =
              solve_all(csp, {.variant = v, .division = dm, .schedule = sm});
          INFO(csp.to_string() << to_string(v));
          CHECK(sorted(r.solutions) == expected);
        }
      }
    }
  }
  CHECK(with_solutions > 50);
}

}  // namespace
}  // namespace icp
