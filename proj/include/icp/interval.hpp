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

#ifndef ICP_INTERVAL_HPP_
#define ICP_INTERVAL_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "icp/integer.hpp"

namespace icp {

// Per-category tallies of counted interval operations. Every counted public
// operation bumps exactly one field; intersect, hull and interior are free.
struct OpCounters {
  uint64_t root = 0;
  uint64_t exp = 0;
  uint64_t div = 0;
  uint64_t multI = 0;
  uint64_t multF = 0;
  uint64_t sum = 0;
  uint64_t q_div = 0;
  uint64_t q_sum = 0;

  uint64_t total() const {
    return root + exp + div + multI + multF + sum + q_div + q_sum;
  }
  OpCounters& operator+=(const OpCounters& o);
  bool operator==(const OpCounters&) const = default;
};

enum class IntervalKind { Empty, Bounded, LeftBounded, RightBounded, Unbounded };

// A set of consecutive integers: [lo..hi], [lo..+inf), (-inf..hi], Z, or the
// empty set. The empty set has a single representation; crossed bounds are
// never stored.
class IntegerInterval {
 public:
  IntegerInterval() = default;  // empty

  static IntegerInterval empty() { return IntegerInterval(); }
  static IntegerInterval all();
  static IntegerInterval point(const Integer& v) { return bounded(v, v); }
  static IntegerInterval bounded(const Integer& lo, const Integer& hi);
  static IntegerInterval at_least(const Integer& lo);
  static IntegerInterval at_most(const Integer& hi);

  IntervalKind kind() const;
  bool is_empty() const { return empty_; }
  bool has_lo() const { return !empty_ && !lo_inf_; }
  bool has_hi() const { return !empty_ && !hi_inf_; }
  bool is_bounded() const { return has_lo() && has_hi(); }
  bool is_singleton() const { return is_bounded() && lo_ == hi_; }
  bool is_zero() const { return is_singleton() && lo_.is_zero(); }
  // Requires has_lo() / has_hi().
  const Integer& lo() const { return lo_; }
  const Integer& hi() const { return hi_; }

  bool contains(const Integer& v) const;
  bool contains_zero() const;
  bool is_subset_of(const IntegerInterval& other) const;

  std::string to_string() const;

  friend bool operator==(const IntegerInterval& a, const IntegerInterval& b);

 private:
  Integer lo_;
  Integer hi_;
  bool empty_ = true;
  bool lo_inf_ = false;
  bool hi_inf_ = false;
};

std::ostream& operator<<(std::ostream& os, const IntegerInterval& v);

// Union of at most two disjoint, non-adjacent intervals in ascending order.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  IntervalUnion(const IntegerInterval& a);  // NOLINT
  IntervalUnion(const IntegerInterval& a, const IntegerInterval& b);

  int size() const { return size_; }
  bool is_empty() const { return size_ == 0; }
  const IntegerInterval& part(int i) const { return parts_[i]; }
  bool contains(const Integer& v) const;
  IntegerInterval hull() const;
  std::string to_string() const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b);

 private:
  std::array<IntegerInterval, 2> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const IntervalUnion& v);

// Uncounted set operations.
IntegerInterval intersect(const IntegerInterval& a, const IntegerInterval& b);
IntervalUnion intersect(const IntervalUnion& a, const IntegerInterval& b);
IntegerInterval hull(const IntegerInterval& a, const IntegerInterval& b);
// Removes one unit from each finite bound.
IntegerInterval interior(const IntegerInterval& a);

// Counted arithmetic. Each result is the smallest interval containing the
// exact integer result set. The counter sink may be null.
IntegerInterval add(const IntegerInterval& a, const IntegerInterval& b,
                    OpCounters* ops = nullptr);
IntegerInterval sub(const IntegerInterval& a, const IntegerInterval& b,
                    OpCounters* ops = nullptr);
IntegerInterval scale(const IntegerInterval& a, const Integer& k,
                      OpCounters* ops = nullptr);
IntegerInterval mult_int(const IntegerInterval& a, const IntegerInterval& b,
                         OpCounters* ops = nullptr);
// Hull of {x : x * y in num for some y in den}.
IntegerInterval div_int(const IntegerInterval& num, const IntegerInterval& den,
                        OpCounters* ops = nullptr);
// Endpoint-quotient division that ignores divisibility. Contains div_int.
IntegerInterval div_weak(const IntegerInterval& num, const IntegerInterval& den,
                         OpCounters* ops = nullptr);
// Division of a half-line (or Z) numerator: hull of {x : x * y in num}.
IntegerInterval div_halfline(const IntegerInterval& num,
                             const IntegerInterval& den,
                             OpCounters* ops = nullptr);
IntegerInterval exp_int(const IntegerInterval& a, unsigned n,
                        OpCounters* ops = nullptr);
// Exact integer n-th roots {x : x^n in a}.
IntervalUnion root(const IntegerInterval& a, unsigned n,
                   OpCounters* ops = nullptr);

}  // namespace icp

#endif  // ICP_INTERVAL_HPP_
