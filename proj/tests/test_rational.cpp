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

#include "icp/rational.hpp"

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

namespace icp {
namespace {

Rational Q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
RationalInterval R(Rational lo, Rational hi) { return RationalInterval::make(lo, hi); }

TEST_CASE("Rational: normalization and arithmetic", "[rational]") {
  CHECK(Q(4, -6) == Q(-2, 3));
  CHECK(Q(4, -6).den() == Integer(3));
  CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
  CHECK(Q(1, 2) * Q(2, 3) == Q(1, 3));
  CHECK(Q(1, 2) / Q(-1, 4) == Q(-2));
  CHECK(Q(-7, 2).floor() == Integer(-4));
  CHECK(Q(-7, 2).ceil() == Integer(-3));
  CHECK(Q(1, 3) < Q(1, 2));
  CHECK(Q(6, 3).to_string() == "2");
  CHECK(Q(-1, 3).to_string() == "-1/3");
  CHECK_THROWS_AS(Q(1, 0), std::domain_error);
}

TEST_CASE("RationalInterval: documented examples", "[rational][examples]") {
  OpCounters ops;
  CHECK(q_add(R(Q(1, 2), Q(1)), R(Q(1, 3), Q(2)), &ops) == R(Q(5, 6), Q(3)));
  CHECK(q_div(R(Q(1), Q(2)), R(Q(0), Q(0)), &ops) == RationalInterval::empty());
  CHECK(q_div(R(Q(-1), Q(2)), R(Q(-3), Q(1)), &ops) == RationalInterval::all());
  CHECK(q_div(R(Q(40), Q(40)), R(Q(1), Q(27)), &ops) == R(Q(40, 27), Q(40)));
  CHECK(ops.q_sum == 1);
  CHECK(ops.q_div == 3);
  CHECK(q_to_halfline(R(Q(1, 3), Q(83, 2)), HalfLine::AtMost) ==
        IntegerInterval::at_most(Integer(41)));
  CHECK(q_to_halfline(R(Q(1, 3), Q(83, 2)), HalfLine::AtLeast) ==
        IntegerInterval::at_least(Integer(1)));
  CHECK(R(Q(1, 3), Q(83, 2)).integers() ==
        IntegerInterval::bounded(Integer(1), Integer(41)));
  CHECK(R(Q(1, 3), Q(1, 2)).integers().is_empty());
}

TEST_CASE("RationalInterval: division with a zero endpoint", "[rational]") {
  auto half_hi = [](Rational lo) { return RationalInterval::make(lo, std::nullopt); };
  auto half_lo = [](Rational hi) { return RationalInterval::make(std::nullopt, hi); };
  CHECK(q_div(R(Q(1), Q(2)), R(Q(0), Q(4))) == half_hi(Q(1, 4)));
  CHECK(q_div(R(Q(-2), Q(-1)), R(Q(0), Q(4))) == half_lo(Q(-1, 4)));
  CHECK(q_div(R(Q(1), Q(2)), R(Q(-4), Q(0))) == half_lo(Q(-1, 4)));
  CHECK(q_div(R(Q(-2), Q(-1)), R(Q(-4), Q(0))) == half_hi(Q(1, 4)));
  CHECK(q_div(R(Q(1), Q(2)), half_hi(Q(1))) == R(Q(0), Q(2)));
}

// Checks the real-division hull by sampling quotients of rational points.
TEST_CASE("RationalInterval: q_div contains sampled quotients and is tight",
          "[rational][property]") {
  testing::Rng rng(21);
  for (int i = 0; i < 10000; ++i) {
    auto pick = [&]() {
      long a = testing::uniform(rng, -8, 8), b = testing::uniform(rng, -8, 8);
      long d = testing::uniform(rng, 1, 3);
      if (b < a) std::swap(a, b);
      return R(Q(a, d), Q(b, d));
    };
    RationalInterval a = pick(), b = pick();
    RationalInterval got = q_div(a, b);
    INFO(a << " / " << b << " = " << got);
    bool a0 = a.contains_zero(), b0 = b.contains_zero();
    if (a0 && b0) {
      CHECK(got == RationalInterval::all());
      continue;
    }
    if (*b.lo() == Rational(0) && *b.hi() == Rational(0)) {
      CHECK(got.is_empty());
      continue;
    }
    // Sample x, y on a grid of each interval.
    for (int sx = 0; sx <= 6; ++sx) {
      for (int sy = 0; sy <= 6; ++sy) {
        Rational x = *a.lo() + (*a.hi() - *a.lo()) * Q(sx, 6);
        Rational y = *b.lo() + (*b.hi() - *b.lo()) * Q(sy, 6);
        if (y.sign() == 0) continue;
        CHECK(got.contains(x / y));
      }
    }
    if (!b0) {
      // The hull is attained at endpoint quotients.
      std::vector<Rational> ends;
      for (const Rational& x : {*a.lo(), *a.hi()}) {
        for (const Rational& y : {*b.lo(), *b.hi()}) ends.push_back(x / y);
      }
      CHECK(*got.lo() == *std::min_element(ends.begin(), ends.end()));
      CHECK(*got.hi() == *std::max_element(ends.begin(), ends.end()));
    }
  }
}

}  // namespace
}  // namespace icp
