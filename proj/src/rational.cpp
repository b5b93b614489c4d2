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

#include <ostream>
#include <stdexcept>

namespace icp {

Rational::Rational(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  Integer g = gcd(n, d);
  num_ = floor_div(n, g);
  den_ = floor_div(d, g);
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
  return os << v.to_string();
}

RationalInterval RationalInterval::all() {
  RationalInterval r;
  r.empty_ = false;
  return r;
}

RationalInterval RationalInterval::make(std::optional<Rational> lo,
                                        std::optional<Rational> hi) {
  RationalInterval r;
  if (lo && hi && *hi < *lo) return r;
  r.empty_ = false;
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  return r;
}

RationalInterval RationalInterval::from(const IntegerInterval& v) {
  if (v.is_empty()) return empty();
  std::optional<Rational> lo, hi;
  if (v.has_lo()) lo = Rational(v.lo());
  if (v.has_hi()) hi = Rational(v.hi());
  return make(std::move(lo), std::move(hi));
}

bool RationalInterval::contains(const Rational& v) const {
  if (empty_) return false;
  if (lo_ && v < *lo_) return false;
  if (hi_ && *hi_ < v) return false;
  return true;
}

IntegerInterval RationalInterval::integers() const {
  if (empty_) return IntegerInterval::empty();
  if (!lo_ && !hi_) return IntegerInterval::all();
  if (!lo_) return IntegerInterval::at_most(hi_->floor());
  if (!hi_) return IntegerInterval::at_least(lo_->ceil());
  return IntegerInterval::bounded(lo_->ceil(), hi_->floor());
}

std::string RationalInterval::to_string() const {
  if (empty_) return "{}";
  std::string s = lo_ ? "[" + lo_->to_string() : "(-inf";
  s += ", ";
  s += hi_ ? hi_->to_string() + "]" : "+inf)";
  return s;
}

std::ostream& operator<<(std::ostream& os, const RationalInterval& v) {
  return os << v.to_string();
}

namespace {

std::optional<Rational> neg(const std::optional<Rational>& v) {
  if (!v) return std::nullopt;
  return -*v;
}

RationalInterval negate(const RationalInterval& a) {
  if (a.is_empty()) return a;
  return RationalInterval::make(neg(a.hi()), neg(a.lo()));
}

// Quotient hull for a denominator with a positive lower bound c and upper
// bound d (nullopt = +inf).
RationalInterval div_positive(const RationalInterval& a, const Rational& c,
                              const std::optional<Rational>& d) {
  // x / inf is treated as the limit 0.
  auto quot = [](const std::optional<Rational>& x,
                 const std::optional<Rational>& y) -> std::optional<Rational> {
    if (!x) return std::nullopt;
    if (!y) return Rational(0);
    return *x / *y;
  };
  bool nonneg = a.lo() && a.lo()->sign() >= 0;
  bool nonpos = a.hi() && a.hi()->sign() <= 0;
  if (nonneg) return RationalInterval::make(quot(a.lo(), d), quot(a.hi(), c));
  if (nonpos) return RationalInterval::make(quot(a.lo(), c), quot(a.hi(), d));
  return RationalInterval::make(quot(a.lo(), c), quot(a.hi(), c));
}

}  // namespace

RationalInterval q_add(const RationalInterval& a, const RationalInterval& b,
                       OpCounters* ops) {
  if (ops) ++ops->q_sum;
  if (a.is_empty() || b.is_empty()) return RationalInterval::empty();
  std::optional<Rational> lo, hi;
  if (a.lo() && b.lo()) lo = *a.lo() + *b.lo();
  if (a.hi() && b.hi()) hi = *a.hi() + *b.hi();
  return RationalInterval::make(std::move(lo), std::move(hi));
}

RationalInterval q_div(const RationalInterval& a, const RationalInterval& b,
                       OpCounters* ops) {
  if (ops) ++ops->q_div;
  if (a.is_empty() || b.is_empty()) return RationalInterval::empty();
  bool a_zero = a.contains_zero();
  if (!b.contains_zero()) {
    if (b.hi() && b.hi()->sign() < 0) {
      return div_positive(negate(a), -*b.hi(), neg(b.lo()));
    }
    return div_positive(a, *b.lo(), b.hi());
  }
  if (a_zero) return RationalInterval::all();
  bool lo_zero = b.lo() && b.lo()->sign() == 0;
  bool hi_zero = b.hi() && b.hi()->sign() == 0;
  if (lo_zero && hi_zero) return RationalInterval::empty();
  if (!lo_zero && !hi_zero) return RationalInterval::all();
  bool a_pos = a.lo() && a.lo()->sign() > 0;
  // Denominator [0, d]: quotients x / y with y -> 0+ escape to infinity.
  if (lo_zero) {
    if (a_pos) {
      return RationalInterval::make(
          b.hi() ? std::optional<Rational>(*a.lo() / *b.hi()) : Rational(0),
          std::nullopt);
    }
    return RationalInterval::make(
        std::nullopt,
        b.hi() ? std::optional<Rational>(*a.hi() / *b.hi()) : Rational(0));
  }
  // Denominator [c, 0].
  if (a_pos) {
    return RationalInterval::make(
        std::nullopt,
        b.lo() ? std::optional<Rational>(*a.lo() / *b.lo()) : Rational(0));
  }
  return RationalInterval::make(
      b.lo() ? std::optional<Rational>(*a.hi() / *b.lo()) : Rational(0),
      std::nullopt);
}

IntegerInterval q_to_halfline(const RationalInterval& a, HalfLine side) {
  if (a.is_empty()) return IntegerInterval::empty();
  if (side == HalfLine::AtMost) {
    if (!a.hi()) return IntegerInterval::all();
    return IntegerInterval::at_most(a.hi()->floor());
  }
  if (!a.lo()) return IntegerInterval::all();
  return IntegerInterval::at_least(a.lo()->ceil());
}

}  // namespace icp
