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

#include "icp/interval.hpp"

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

namespace icp {
namespace {

using testing::elements;
using testing::hull_of;

IntegerInterval I(long lo, long hi) {
  return IntegerInterval::bounded(Integer(lo), Integer(hi));
}
IntegerInterval AtLeast(long lo) { return IntegerInterval::at_least(Integer(lo)); }
IntegerInterval AtMost(long hi) { return IntegerInterval::at_most(Integer(hi)); }
const IntegerInterval kZ = IntegerInterval::all();
const IntegerInterval kEmpty = IntegerInterval::empty();

// ============================================================================
// Fixed examples
// ============================================================================

TEST_CASE("IntegerInterval: construction and kinds", "[interval]") {
  CHECK(I(3, 2) == kEmpty);
  CHECK(I(3, 2).kind() == IntervalKind::Empty);
  CHECK(I(1, 1).is_singleton());
  CHECK(AtLeast(2).kind() == IntervalKind::LeftBounded);
  CHECK(AtMost(2).kind() == IntervalKind::RightBounded);
  CHECK(kZ.kind() == IntervalKind::Unbounded);
  CHECK(I(-2, 5).to_string() == "[-2..5]");
  CHECK(AtLeast(3).to_string() == "[3..+inf)");
  CHECK(AtMost(3).to_string() == "(-inf..3]");
  CHECK(kZ.to_string() == "Z");
  CHECK(kEmpty.to_string() == "{}");
  CHECK(I(2, 3).is_subset_of(AtLeast(1)));
  CHECK(!AtLeast(1).is_subset_of(I(2, 3)));
}

TEST_CASE("Interval kernel: documented examples", "[interval][examples]") {
  OpCounters ops;
  CHECK(add(I(2, 4), I(3, 8), &ops) == I(5, 12));
  CHECK(sub(I(3, 7), I(1, 8), &ops) == I(-5, 6));
  CHECK(mult_int(I(3, 3), I(1, 2), &ops) == I(3, 6));
  CHECK(mult_int(I(-2, 1), I(-3, 10), &ops) == I(-20, 10));
  CHECK(div_int(I(3, 5), I(-1, 2), &ops) == I(-5, 5));
  CHECK(div_int(I(-3, 5), I(-1, 2), &ops) == kZ);
  CHECK(div_int(I(1, 100), I(-7, 0), &ops) == I(-100, -1));
  CHECK(div_int(I(155, 161), I(9, 11), &ops) == I(16, 16));
  CHECK(div_weak(I(155, 161), I(9, 11), &ops) == I(15, 17));
  CHECK(div_weak(I(8, 10), I(-3, 10), &ops) == I(-10, 10));
  CHECK(div_int(I(7, 7), I(2, 2), &ops) == kEmpty);
  CHECK(div_int(I(1, 2), I(0, 0), &ops) == kEmpty);
  CHECK(exp_int(I(1, 2), 2, &ops) == I(1, 4));
  CHECK(exp_int(I(-3, 2), 2, &ops) == I(0, 9));
  CHECK(exp_int(I(-3, -2), 2, &ops) == I(4, 9));
  CHECK(exp_int(I(-3, 2), 3, &ops) == I(-27, 8));
  CHECK(root(I(-30, 100), 3, &ops) == IntervalUnion(I(-3, 4)));
  CHECK(root(I(-100, 9), 2, &ops) == IntervalUnion(I(-3, 3)));
  CHECK(root(I(1, 9), 2, &ops) == IntervalUnion(I(-3, -1), I(1, 3)));
  CHECK(root(I(1, 9), 2).size() == 2);
  CHECK(root(I(-9, -1), 2) == IntervalUnion());
  CHECK(root(I(5, 8), 2) == IntervalUnion());
  CHECK(scale(I(2, 5), Integer(-3), &ops) == I(-15, -6));
  CHECK(scale(I(2, 5), Integer(0), &ops) == I(0, 0));
  CHECK(scale(kEmpty, Integer(0), &ops) == kEmpty);
  CHECK(interior(I(1, 5)) == I(2, 4));
  CHECK(interior(I(1, 2)) == kEmpty);
  CHECK(interior(AtLeast(1)) == AtLeast(2));
  CHECK(intersect(I(1, 5), I(4, 9)) == I(4, 5));
  CHECK(intersect(I(1, 3), I(4, 9)) == kEmpty);
  CHECK(hull(I(1, 3), I(7, 9)) == I(1, 9));
}

TEST_CASE("Interval kernel: half-line division", "[interval][examples]") {
  CHECK(div_halfline(AtMost(45), I(1, 100)) == AtMost(45));
  CHECK(div_halfline(AtMost(45), I(-2, 3)) == kZ);
  CHECK(div_halfline(AtMost(-10), I(-1, -1)) == AtLeast(10));
  CHECK(div_halfline(AtLeast(10), I(-1, -1)) == AtMost(-10));
  CHECK(div_halfline(AtMost(-10), I(0, 0)) == kEmpty);
  CHECK(div_halfline(AtMost(10), I(0, 0)) == kZ);
  CHECK(div_halfline(AtMost(-10), I(0, 4)) == AtMost(-3));
  CHECK(div_halfline(kZ, I(1, 4)) == kZ);
  CHECK_THROWS_AS(div_halfline(I(1, 2), I(1, 4)), std::invalid_argument);
}

TEST_CASE("Interval kernel: unbounded operands", "[interval]") {
  CHECK(add(AtLeast(1), I(2, 3)) == AtLeast(3));
  CHECK(sub(I(0, 0), AtLeast(1)) == AtMost(-1));
  CHECK(add(AtLeast(1), AtMost(1)) == kZ);
  CHECK(scale(AtLeast(2), Integer(-3)) == AtMost(-6));
  CHECK(mult_int(AtLeast(2), I(-3, -1)) == AtMost(-2));
  CHECK(mult_int(kZ, I(0, 0)) == I(0, 0));
  CHECK(mult_int(I(0, 3), AtLeast(2)) == AtLeast(0));
  CHECK(mult_int(I(-1, 1), AtLeast(1)) == kZ);
  CHECK(exp_int(AtMost(-2), 2) == AtLeast(4));
  CHECK(exp_int(AtMost(2), 2) == AtLeast(0));
  CHECK(exp_int(AtMost(2), 3) == AtMost(8));
  CHECK(root(AtMost(30), 3) == IntervalUnion(AtMost(3)));
  CHECK(root(AtLeast(5), 2) == IntervalUnion(AtMost(-3), AtLeast(3)));
  CHECK(root(kZ, 2) == IntervalUnion(kZ));
  CHECK(div_int(AtLeast(1), I(-2, 5)) == kZ);
  CHECK(div_int(I(12, 12), AtLeast(1)) == I(1, 12));
  CHECK(div_int(AtLeast(5), I(2, 3)) == AtLeast(2));
  CHECK(div_int(AtLeast(5), AtLeast(2)) == AtLeast(1));
  CHECK(div_int(AtMost(-5), I(2, 3)) == AtMost(-2));
  CHECK(div_int(I(5, 5), AtLeast(6)) == kEmpty);
  CHECK(div_weak(AtLeast(5), I(2, 3)) == AtLeast(2));
}

TEST_CASE("Interval kernel: every public operation bumps one counter",
          "[interval][counters]") {
  OpCounters ops;
  add(I(1, 2), I(1, 2), &ops);
  sub(I(1, 2), I(1, 2), &ops);
  CHECK(ops.sum == 2);
  scale(I(1, 2), Integer(3), &ops);
  CHECK(ops.multF == 1);
  mult_int(I(1, 2), I(1, 2), &ops);
  CHECK(ops.multI == 1);
  div_int(I(1, 2), I(1, 2), &ops);
  div_weak(I(1, 2), I(-1, 2), &ops);
  div_halfline(AtLeast(1), I(1, 2), &ops);
  CHECK(ops.div == 3);
  exp_int(I(1, 2), 2, &ops);
  CHECK(ops.exp == 1);
  root(I(1, 2), 2, &ops);
  CHECK(ops.root == 1);
  intersect(I(1, 2), I(1, 2));
  interior(I(1, 2));
  hull(I(1, 2), I(5, 6));
  CHECK(ops.total() == 9);
}

// ============================================================================
// Properties against enumeration
// ============================================================================

constexpr int kCases = 10000;
constexpr long kLo = -12, kHi = 12;

TEST_CASE("Interval kernel: sums, scaling and products are exact hulls",
          "[interval][property]") {
  testing::Rng rng(11);
  for (int i = 0; i < kCases; ++i) {
    IntegerInterval a = testing::random_interval(rng, kLo, kHi, 20);
    IntegerInterval b = testing::random_interval(rng, kLo, kHi, 20);
    long k = testing::uniform(rng, -4, 4);
    std::set<long> s_add, s_sub, s_mul, s_scale;
    for (long x : elements(a)) {
      s_scale.insert(k * x);
      for (long y : elements(b)) {
        s_add.insert(x + y);
        s_sub.insert(x - y);
        s_mul.insert(x * y);
      }
    }
    INFO(a << " " << b << " k=" << k);
    CHECK(add(a, b) == hull_of(s_add));
    CHECK(sub(a, b) == hull_of(s_sub));
    CHECK(mult_int(a, b) == hull_of(s_mul));
    CHECK(scale(a, Integer(k)) == hull_of(s_scale));
    std::set<long> s_int, s_hull;
    for (long x : elements(a)) {
      if (b.contains(Integer(x))) s_int.insert(x);
      s_hull.insert(x);
    }
    for (long y : elements(b)) s_hull.insert(y);
    CHECK(intersect(a, b) == hull_of(s_int));
    CHECK(hull(a, b) == hull_of(s_hull));
  }
}

TEST_CASE("Interval kernel: division is the exact quotient hull",
          "[interval][property][division]") {
  testing::Rng rng(12);
  for (int i = 0; i < kCases; ++i) {
    IntegerInterval num = testing::random_interval(rng, kLo, kHi, 20);
    IntegerInterval den = testing::random_interval(rng, kLo, kHi, 20);
    bool all = false;
    std::set<long> q = testing::quotient_set(num, den, &all);
    IntegerInterval expected = all ? kZ : hull_of(q);
    INFO(num << " / " << den);
    IntegerInterval strong = div_int(num, den);
    CHECK(strong == expected);
    IntegerInterval weak = div_weak(num, den);
    CHECK(strong.is_subset_of(weak));
    // When zero is excluded from the denominator, weak division is the
    // hull of the real quotients rounded inward.
    if (!den.is_empty() && !num.is_empty() && !den.contains_zero()) {
      Integer lo = ceil_div(num.lo(), den.lo()), hi = floor_div(num.lo(), den.lo());
      for (const Integer& x : {num.lo(), num.hi()}) {
        for (const Integer& y : {den.lo(), den.hi()}) {
          lo = min(lo, ceil_div(x, y));
          hi = max(hi, floor_div(x, y));
        }
      }
      CHECK(weak == IntegerInterval::bounded(lo, hi));
    }
  }
}

TEST_CASE("Interval kernel: powers and roots are exact",
          "[interval][property][root]") {
  testing::Rng rng(13);
  for (int i = 0; i < kCases; ++i) {
    IntegerInterval a = testing::random_interval(rng, kLo, kHi, 20);
    unsigned n = static_cast<unsigned>(testing::uniform(rng, 1, 5));
    std::set<long> s_exp;
    for (long x : elements(a)) s_exp.insert(testing::ipow(x, n));
    INFO(a << " n=" << n);
    CHECK(exp_int(a, n) == hull_of(s_exp));
    IntervalUnion r = root(a, n);
    REQUIRE(r.size() <= 2);
    if (r.size() == 2) {
      // Parts are ordered, disjoint and not adjacent.
      CHECK(r.part(0).hi() + Integer(1) < r.part(1).lo());
    }
    for (long x = -15; x <= 15; ++x) {
      CHECK(r.contains(Integer(x)) == a.contains(Integer(testing::ipow(x, n))));
    }
  }
}

TEST_CASE("Interval kernel: half-line division matches enumeration",
          "[interval][property][division]") {
  testing::Rng rng(14);
  constexpr long kWindow = 300;
  for (int i = 0; i < kCases; ++i) {
    long s = testing::uniform(rng, kLo, kHi);
    bool at_most = testing::uniform(rng, 0, 1) == 1;
    IntegerInterval num = at_most ? AtMost(s) : AtLeast(s);
    IntegerInterval den = testing::random_interval(rng, kLo, kHi, 20);
    IntegerInterval got = div_halfline(num, den);
    INFO(num << " / " << den << " = " << got);
    std::set<long> members;
    for (long z = -kWindow; z <= kWindow; ++z) {
      bool in = false;
      for (long y : elements(den)) {
        if (at_most ? z * y <= s : z * y >= s) in = true;
      }
      if (in) members.insert(z);
      CHECK((!in || got.contains(Integer(z))));
    }
    // Every finite bound of the result is attained.
    if (got.has_lo()) CHECK(members.count(*got.lo().to_int64()) == 1);
    if (got.has_hi()) CHECK(members.count(*got.hi().to_int64()) == 1);
    if (members.empty()) CHECK(got.is_empty());
  }
}

TEST_CASE("Interval kernel: operations are monotone", "[interval][property]") {
  testing::Rng rng(15);
  auto shrink = [&](const IntegerInterval& v) {
    if (v.is_empty()) return v;
    long lo = *v.lo().to_int64(), hi = *v.hi().to_int64();
    long a = testing::uniform(rng, lo, hi), b = testing::uniform(rng, lo, hi);
    return I(std::min(a, b), std::max(a, b));
  };
  for (int i = 0; i < kCases; ++i) {
    IntegerInterval a = testing::random_interval(rng, kLo, kHi);
    IntegerInterval b = testing::random_interval(rng, kLo, kHi);
    IntegerInterval a2 = shrink(a), b2 = shrink(b);
    unsigned n = static_cast<unsigned>(testing::uniform(rng, 2, 4));
    INFO(a << " " << b << " " << a2 << " " << b2);
    CHECK(mult_int(a2, b2).is_subset_of(mult_int(a, b)));
    CHECK(div_int(a2, b2).is_subset_of(div_int(a, b)));
    CHECK(div_weak(a2, b2).is_subset_of(div_weak(a, b)));
    CHECK(exp_int(a2, n).is_subset_of(exp_int(a, n)));
    CHECK(root(a2, n).hull().is_subset_of(root(a, n).hull()));
    CHECK(interior(a2).is_subset_of(a));
  }
}

}  // namespace
}  // namespace icp
