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

#ifndef ICP_RATIONAL_HPP_
#define ICP_RATIONAL_HPP_

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "icp/integer.hpp"
#include "icp/interval.hpp"

namespace icp {

// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT
  Rational(int n) : num_(n), den_(1) {}              // NOLINT
  Rational(const Integer& n, const Integer& d);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  int sign() const { return num_.sign(); }

  Integer floor() const { return floor_div(num_, den_); }
  Integer ceil() const { return ceil_div(num_, den_); }
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

// Closed interval of the extended reals with rational finite bounds, or the
// empty set.
class RationalInterval {
 public:
  RationalInterval() = default;  // empty

  static RationalInterval empty() { return RationalInterval(); }
  static RationalInterval all();
  static RationalInterval point(const Rational& v) { return make(v, v); }
  static RationalInterval make(std::optional<Rational> lo,
                               std::optional<Rational> hi);
  static RationalInterval from(const IntegerInterval& v);

  bool is_empty() const { return empty_; }
  // nullopt is -inf for the lower bound and +inf for the upper bound.
  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool contains(const Rational& v) const;
  bool contains_zero() const { return contains(Rational(0)); }
  // Integers inside the interval: [ceil(lo)..floor(hi)].
  IntegerInterval integers() const;
  std::string to_string() const;

  friend bool operator==(const RationalInterval& a,
                         const RationalInterval& b) = default;

 private:
  std::optional<Rational> lo_;
  std::optional<Rational> hi_;
  bool empty_ = true;
};

std::ostream& operator<<(std::ostream& os, const RationalInterval& v);

enum class HalfLine { AtMost, AtLeast };

RationalInterval q_add(const RationalInterval& a, const RationalInterval& b,
                       OpCounters* ops = nullptr);
// Hull of the real quotients {x / y : x in a, y in b, y != 0}.
RationalInterval q_div(const RationalInterval& a, const RationalInterval& b,
                       OpCounters* ops = nullptr);
// Integer half-line below the supremum or above the infimum.
IntegerInterval q_to_halfline(const RationalInterval& a, HalfLine side);

}  // namespace icp

#endif  // ICP_RATIONAL_HPP_
