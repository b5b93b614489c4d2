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

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace icp {

OpCounters& OpCounters::operator+=(const OpCounters& o) {
  root += o.root;
  exp += o.exp;
  div += o.div;
  multI += o.multI;
  multF += o.multF;
  sum += o.sum;
  q_div += o.q_div;
  q_sum += o.q_sum;
  return *this;
}

// ============================================================================
// IntegerInterval
// ============================================================================

IntegerInterval IntegerInterval::all() {
  IntegerInterval r;
  r.empty_ = false;
  r.lo_inf_ = true;
  r.hi_inf_ = true;
  return r;
}

IntegerInterval IntegerInterval::bounded(const Integer& lo, const Integer& hi) {
  IntegerInterval r;
  if (hi < lo) return r;
  r.empty_ = false;
  r.lo_ = lo;
  r.hi_ = hi;
  return r;
}

IntegerInterval IntegerInterval::at_least(const Integer& lo) {
  IntegerInterval r;
  r.empty_ = false;
  r.lo_ = lo;
  r.hi_inf_ = true;
  return r;
}

IntegerInterval IntegerInterval::at_most(const Integer& hi) {
  IntegerInterval r;
  r.empty_ = false;
  r.lo_inf_ = true;
  r.hi_ = hi;
  return r;
}

IntervalKind IntegerInterval::kind() const {
  if (empty_) return IntervalKind::Empty;
  if (lo_inf_ && hi_inf_) return IntervalKind::Unbounded;
  if (lo_inf_) return IntervalKind::RightBounded;
  if (hi_inf_) return IntervalKind::LeftBounded;
  return IntervalKind::Bounded;
}

bool IntegerInterval::contains(const Integer& v) const {
  if (empty_) return false;
  if (!lo_inf_ && v < lo_) return false;
  if (!hi_inf_ && hi_ < v) return false;
  return true;
}

bool IntegerInterval::contains_zero() const {
  if (empty_) return false;
  if (!lo_inf_ && lo_.sign() > 0) return false;
  if (!hi_inf_ && hi_.sign() < 0) return false;
  return true;
}

bool IntegerInterval::is_subset_of(const IntegerInterval& other) const {
  if (empty_) return true;
  if (other.empty_) return false;
  if (!other.lo_inf_ && (lo_inf_ || lo_ < other.lo_)) return false;
  if (!other.hi_inf_ && (hi_inf_ || other.hi_ < hi_)) return false;
  return true;
}

std::string IntegerInterval::to_string() const {
  if (empty_) return "{}";
  if (lo_inf_ && hi_inf_) return "Z";
  std::string s = lo_inf_ ? "(-inf" : "[" + lo_.str();
  s += "..";
  s += hi_inf_ ? "+inf)" : hi_.str() + "]";
  return s;
}

bool operator==(const IntegerInterval& a, const IntegerInterval& b) {
  if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
  if (a.lo_inf_ != b.lo_inf_ || a.hi_inf_ != b.hi_inf_) return false;
  if (!a.lo_inf_ && a.lo_ != b.lo_) return false;
  if (!a.hi_inf_ && a.hi_ != b.hi_) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntegerInterval& v) {
  return os << v.to_string();
}

// ============================================================================
// IntervalUnion
// ============================================================================

IntervalUnion::IntervalUnion(const IntegerInterval& a) {
  if (!a.is_empty()) parts_[size_++] = a;
}

IntervalUnion::IntervalUnion(const IntegerInterval& a,
                             const IntegerInterval& b) {
  if (a.is_empty()) {
    *this = IntervalUnion(b);
    return;
  }
  if (b.is_empty()) {
    *this = IntervalUnion(a);
    return;
  }
  const IntegerInterval* first = &a;
  const IntegerInterval* second = &b;
  if (b.has_lo() && (!a.has_lo() || b.lo() < a.lo())) std::swap(first, second);
  // Merge when the parts overlap or touch.
  bool merge = !first->has_hi() || !second->has_lo() ||
               second->lo() <= first->hi() + Integer(1);
  if (merge) {
    parts_[0] = icp::hull(*first, *second);
    size_ = 1;
  } else {
    parts_[0] = *first;
    parts_[1] = *second;
    size_ = 2;
  }
}

bool IntervalUnion::contains(const Integer& v) const {
  for (int i = 0; i < size_; ++i) {
    if (parts_[i].contains(v)) return true;
  }
  return false;
}

IntegerInterval IntervalUnion::hull() const {
  if (size_ == 0) return IntegerInterval::empty();
  if (size_ == 1) return parts_[0];
  return icp::hull(parts_[0], parts_[1]);
}

std::string IntervalUnion::to_string() const {
  if (size_ == 0) return "{}";
  std::string s = parts_[0].to_string();
  if (size_ == 2) s += " U " + parts_[1].to_string();
  return s;
}

bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.size_ != b.size_) return false;
  for (int i = 0; i < a.size_; ++i) {
    if (!(a.parts_[i] == b.parts_[i])) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntervalUnion& v) {
  return os << v.to_string();
}

// ============================================================================
// Extended integers
// ============================================================================

namespace {

// An element of Z extended with -inf and +inf.
struct Ext {
  int inf = 0;  // -1, 0 or +1
  Integer v;

  static Ext finite(const Integer& x) { return Ext{0, x}; }
  static Ext pos_inf() { return Ext{1, Integer()}; }
  static Ext neg_inf() { return Ext{-1, Integer()}; }
  int sign() const { return inf != 0 ? inf : v.sign(); }
};

bool operator<(const Ext& a, const Ext& b) {
  if (a.inf != b.inf) return a.inf < b.inf;
  if (a.inf != 0) return false;
  return a.v < b.v;
}

Ext neg(const Ext& a) { return Ext{-a.inf, a.inf == 0 ? -a.v : Integer()}; }

Ext lower(const IntegerInterval& a) {
  return a.has_lo() ? Ext::finite(a.lo()) : Ext::neg_inf();
}

Ext upper(const IntegerInterval& a) {
  return a.has_hi() ? Ext::finite(a.hi()) : Ext::pos_inf();
}

// Zero times an infinity is zero, which yields the exact hull for products of
// closed intervals.
Ext mul(const Ext& a, const Ext& b) {
  if (a.inf == 0 && b.inf == 0) return Ext::finite(a.v * b.v);
  int s = a.sign() * b.sign();
  if (s == 0) return Ext::finite(Integer(0));
  return s > 0 ? Ext::pos_inf() : Ext::neg_inf();
}

Ext add(const Ext& a, const Ext& b) {
  if (a.inf != 0) return a;
  if (b.inf != 0) return b;
  return Ext::finite(a.v + b.v);
}

IntegerInterval make(const Ext& lo, const Ext& hi) {
  if (lo.inf > 0 || hi.inf < 0) return IntegerInterval::empty();
  if (lo.inf < 0 && hi.inf > 0) return IntegerInterval::all();
  if (lo.inf < 0) return IntegerInterval::at_most(hi.v);
  if (hi.inf > 0) return IntegerInterval::at_least(lo.v);
  return IntegerInterval::bounded(lo.v, hi.v);
}

IntegerInterval negate(const IntegerInterval& a) {
  if (a.is_empty()) return a;
  return make(neg(upper(a)), neg(lower(a)));
}

void count(uint64_t OpCounters::*field, OpCounters* ops) {
  if (ops) ++(ops->*field);
}

}  // namespace

// ============================================================================
// Set operations
// ============================================================================

IntegerInterval intersect(const IntegerInterval& a, const IntegerInterval& b) {
  if (a.is_empty() || b.is_empty()) return IntegerInterval::empty();
  if (a.is_bounded() && b.is_bounded()) {
    return IntegerInterval::bounded(max(a.lo(), b.lo()), min(a.hi(), b.hi()));
  }
  Ext lo = lower(a), hi = upper(a);
  Ext blo = lower(b), bhi = upper(b);
  if (lo < blo) lo = blo;
  if (bhi < hi) hi = bhi;
  if (hi < lo) return IntegerInterval::empty();
  return make(lo, hi);
}

IntervalUnion intersect(const IntervalUnion& a, const IntegerInterval& b) {
  if (a.size() == 0) return a;
  if (a.size() == 1) return IntervalUnion(intersect(a.part(0), b));
  return IntervalUnion(intersect(a.part(0), b), intersect(a.part(1), b));
}

IntegerInterval hull(const IntegerInterval& a, const IntegerInterval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  Ext lo = lower(a), hi = upper(a);
  Ext blo = lower(b), bhi = upper(b);
  if (blo < lo) lo = blo;
  if (hi < bhi) hi = bhi;
  return make(lo, hi);
}

IntegerInterval interior(const IntegerInterval& a) {
  if (a.is_empty()) return a;
  Ext lo = lower(a), hi = upper(a);
  if (lo.inf == 0) lo.v = lo.v + Integer(1);
  if (hi.inf == 0) hi.v = hi.v - Integer(1);
  if (hi < lo) return IntegerInterval::empty();
  return make(lo, hi);
}

// ============================================================================
// Sums and products
// ============================================================================

IntegerInterval add(const IntegerInterval& a, const IntegerInterval& b,
                    OpCounters* ops) {
  count(&OpCounters::sum, ops);
  if (a.is_empty() || b.is_empty()) return IntegerInterval::empty();
  if (a.is_bounded() && b.is_bounded()) {
    return IntegerInterval::bounded(a.lo() + b.lo(), a.hi() + b.hi());
  }
  return make(add(lower(a), lower(b)), add(upper(a), upper(b)));
}

IntegerInterval sub(const IntegerInterval& a, const IntegerInterval& b,
                    OpCounters* ops) {
  count(&OpCounters::sum, ops);
  if (a.is_empty() || b.is_empty()) return IntegerInterval::empty();
  if (a.is_bounded() && b.is_bounded()) {
    return IntegerInterval::bounded(a.lo() - b.hi(), a.hi() - b.lo());
  }
  return make(add(lower(a), neg(upper(b))), add(upper(a), neg(lower(b))));
}

IntegerInterval scale(const IntegerInterval& a, const Integer& k,
                      OpCounters* ops) {
  count(&OpCounters::multF, ops);
  if (a.is_empty()) return a;
  if (k.is_zero()) return IntegerInterval::point(Integer(0));
  Ext f = Ext::finite(k);
  Ext lo = mul(lower(a), f), hi = mul(upper(a), f);
  if (k.sign() < 0) std::swap(lo, hi);
  return make(lo, hi);
}

IntegerInterval mult_int(const IntegerInterval& a, const IntegerInterval& b,
                         OpCounters* ops) {
  count(&OpCounters::multI, ops);
  if (a.is_empty() || b.is_empty()) return IntegerInterval::empty();
  if (a.is_zero() || b.is_zero()) return IntegerInterval::point(Integer(0));
  if (a.is_bounded() && b.is_bounded()) {
    if (a.lo().sign() >= 0 && b.lo().sign() >= 0) {
      return IntegerInterval::bounded(a.lo() * b.lo(), a.hi() * b.hi());
    }
    Integer p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
    Integer p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
    return IntegerInterval::bounded(min(min(p1, p2), min(p3, p4)),
                                    max(max(p1, p2), max(p3, p4)));
  }
  Ext p[4] = {mul(lower(a), lower(b)), mul(lower(a), upper(b)),
              mul(upper(a), lower(b)), mul(upper(a), upper(b))};
  Ext lo = p[0], hi = p[0];
  for (const Ext& e : p) {
    if (e < lo) lo = e;
    if (hi < e) hi = e;
  }
  return make(lo, hi);
}

// ============================================================================
// Division
// ============================================================================

namespace {

// Least y in [y..ymax] having a multiple in [a..b], for 1 <= a <= b and
// 1 <= y <= ymax <= b. Walks blocks of divisors sharing the same quotient
// floor(b / y), so the cost is O(sqrt(b)) in the worst case.
std::optional<Integer> least_divisor(const Integer& a, const Integer& b,
                                     Integer y, const Integer& ymax) {
  while (y <= ymax) {
    Integer q = floor_div(b, y);
    if (y * q >= a) return y;
    Integer t = ceil_div(a, q);
    Integer top = min(floor_div(b, q), ymax);
    if (t <= top) return max(y, t);
    y = top + Integer(1);
  }
  return std::nullopt;
}

// Largest y in [ymin..y] having a multiple in [a..b], same preconditions.
std::optional<Integer> greatest_divisor(const Integer& a, const Integer& b,
                                        Integer y, const Integer& ymin) {
  while (y >= ymin) {
    Integer q = floor_div(b, y);
    if (y * q >= a) return y;
    y = floor_div(b, q + Integer(1));
  }
  return std::nullopt;
}

// Hull of the quotients {x / y : y | x} for x in [a..b] and y in [c..d] with
// a >= 1 and c >= 1. Infinite upper bounds are allowed.
IntegerInterval positive_quotients(const Integer& a, const Ext& b,
                                   const Integer& c, const Ext& d) {
  if (b.inf > 0) {
    Integer lo = d.inf > 0 ? Integer(1) : ceil_div(a, d.v);
    return IntegerInterval::at_least(lo);
  }
  if (b.v < c) return IntegerInterval::empty();
  Integer ymax = d.inf > 0 ? b.v : min(d.v, b.v);
  std::optional<Integer> c1 = least_divisor(a, b.v, c, ymax);
  if (!c1) return IntegerInterval::empty();
  std::optional<Integer> d1 = greatest_divisor(a, b.v, ymax, *c1);
  return IntegerInterval::bounded(ceil_div(a, *d1), floor_div(b.v, *c1));
}

// Exact quotient hull when the denominator excludes zero.
IntegerInterval div_nonzero_den(const IntegerInterval& num,
                                const IntegerInterval& den) {
  if (den.has_hi() && den.hi().sign() < 0) {
    return div_nonzero_den(negate(num), negate(den));
  }
  const Integer& c = den.lo();
  Ext d = upper(den);
  IntegerInterval result;
  if (num.contains_zero()) result = IntegerInterval::point(Integer(0));
  IntegerInterval pos =
      intersect(num, IntegerInterval::at_least(Integer(1)));
  if (!pos.is_empty()) {
    result = hull(result, positive_quotients(pos.lo(), upper(pos), c, d));
  }
  IntegerInterval negpart =
      intersect(num, IntegerInterval::at_most(Integer(-1)));
  if (!negpart.is_empty()) {
    IntegerInterval flipped = negate(negpart);
    result = hull(result, negate(positive_quotients(flipped.lo(),
                                                    upper(flipped), c, d)));
  }
  return result;
}

IntegerInterval div_exact(const IntegerInterval& num,
                          const IntegerInterval& den) {
  if (num.is_empty() || den.is_empty()) return IntegerInterval::empty();
  bool num_zero = num.contains_zero();
  if (!den.contains_zero()) return div_nonzero_den(num, den);
  if (num_zero) return IntegerInterval::all();
  if (den.is_zero()) return IntegerInterval::empty();
  bool lo_zero = den.has_lo() && den.lo().is_zero();
  bool hi_zero = den.has_hi() && den.hi().is_zero();
  if (!lo_zero && !hi_zero) {
    // Denominator straddles zero: y = 1 and y = -1 give +-num, and no
    // quotient exceeds the numerator in magnitude.
    Ext e = neg(lower(num));
    Ext u = upper(num);
    if (e < u) e = u;
    return make(neg(e), e);
  }
  IntegerInterval stripped =
      lo_zero ? intersect(den, IntegerInterval::at_least(Integer(1)))
              : intersect(den, IntegerInterval::at_most(Integer(-1)));
  return div_nonzero_den(num, stripped);
}

}  // namespace

IntegerInterval div_int(const IntegerInterval& num, const IntegerInterval& den,
                        OpCounters* ops) {
  count(&OpCounters::div, ops);
  return div_exact(num, den);
}

IntegerInterval div_weak(const IntegerInterval& num, const IntegerInterval& den,
                         OpCounters* ops) {
  count(&OpCounters::div, ops);
  if (num.is_empty() || den.is_empty()) return IntegerInterval::empty();
  if (!num.is_bounded() || !den.is_bounded()) return div_exact(num, den);
  Integer c = den.lo(), d = den.hi();
  if (den.contains_zero()) {
    if (num.contains_zero() || c == d || (c.sign() != 0 && d.sign() != 0)) {
      return div_exact(num, den);
    }
    if (c.is_zero()) {
      c = Integer(1);
    } else {
      d = Integer(-1);
    }
  }
  const Integer& a = num.lo();
  const Integer& b = num.hi();
  Integer lo = min(min(ceil_div(a, c), ceil_div(a, d)),
                   min(ceil_div(b, c), ceil_div(b, d)));
  Integer hi = max(max(floor_div(a, c), floor_div(a, d)),
                   max(floor_div(b, c), floor_div(b, d)));
  return IntegerInterval::bounded(lo, hi);
}

IntegerInterval div_halfline(const IntegerInterval& num,
                             const IntegerInterval& den, OpCounters* ops) {
  count(&OpCounters::div, ops);
  if (num.is_empty() || den.is_empty()) return IntegerInterval::empty();
  if (num.kind() == IntervalKind::Bounded) {
    throw std::invalid_argument("div_halfline requires an unbounded numerator");
  }
  if (num.kind() == IntervalKind::Unbounded) return IntegerInterval::all();
  if (num.kind() == IntervalKind::LeftBounded) {
    return negate(div_halfline(negate(num), den, nullptr));
  }
  // num = (-inf..s]: collect every x with x * y <= s for some y in den.
  const Integer& s = num.hi();
  if (den.contains_zero() && s.sign() >= 0) return IntegerInterval::all();
  IntegerInterval pos = intersect(den, IntegerInterval::at_least(Integer(1)));
  IntegerInterval negpart =
      intersect(den, IntegerInterval::at_most(Integer(-1)));
  if (!pos.is_empty() && !negpart.is_empty()) return IntegerInterval::all();
  if (!pos.is_empty()) {
    if (s.sign() >= 0) return IntegerInterval::at_most(floor_div(s, pos.lo()));
    return IntegerInterval::at_most(
        pos.has_hi() ? floor_div(s, pos.hi()) : Integer(-1));
  }
  if (!negpart.is_empty()) {
    if (s.sign() >= 0) {
      return IntegerInterval::at_least(ceil_div(s, negpart.hi()));
    }
    return IntegerInterval::at_least(
        negpart.has_lo() ? ceil_div(s, negpart.lo()) : Integer(1));
  }
  return IntegerInterval::empty();  // den is [0..0] and s < 0
}

// ============================================================================
// Powers and roots
// ============================================================================

namespace {

Ext ext_pow(const Ext& a, unsigned n) {
  if (a.inf == 0) return Ext::finite(pow(a.v, n));
  if (a.inf > 0 || n % 2 == 1) return a;
  return Ext::pos_inf();
}

}  // namespace

IntegerInterval exp_int(const IntegerInterval& a, unsigned n,
                        OpCounters* ops) {
  count(&OpCounters::exp, ops);
  if (n == 0) throw std::invalid_argument("exponent must be positive");
  if (a.is_empty()) return a;
  Ext lo = lower(a), hi = upper(a);
  if (n % 2 == 1 || lo.sign() >= 0) return make(ext_pow(lo, n), ext_pow(hi, n));
  if (hi.sign() <= 0) return make(ext_pow(hi, n), ext_pow(lo, n));
  Ext l = ext_pow(lo, n), h = ext_pow(hi, n);
  return make(Ext::finite(Integer(0)), l < h ? h : l);
}

IntervalUnion root(const IntegerInterval& a, unsigned n, OpCounters* ops) {
  count(&OpCounters::root, ops);
  if (n == 0) throw std::invalid_argument("root degree must be positive");
  if (a.is_empty()) return IntervalUnion();
  if (n == 1) return IntervalUnion(a);
  if (n % 2 == 1) {
    Ext lo = a.has_lo() ? Ext::finite(ceil_root(a.lo(), n)) : Ext::neg_inf();
    Ext hi = a.has_hi() ? Ext::finite(floor_root(a.hi(), n)) : Ext::pos_inf();
    if (hi < lo) return IntervalUnion();
    return IntervalUnion(make(lo, hi));
  }
  if (a.has_hi() && a.hi().sign() < 0) return IntervalUnion();
  Ext r_hi = a.has_hi() ? Ext::finite(floor_root(a.hi(), n)) : Ext::pos_inf();
  Integer lo_pos = a.has_lo() && a.lo().sign() > 0 ? a.lo() : Integer(0);
  Ext r_lo = Ext::finite(ceil_root(lo_pos, n));
  if (r_hi < r_lo) return IntervalUnion();
  return IntervalUnion(make(neg(r_hi), neg(r_lo)), make(r_lo, r_hi));
}

}  // namespace icp
