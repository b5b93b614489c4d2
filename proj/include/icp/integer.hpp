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

#ifndef ICP_INTEGER_HPP_
#define ICP_INTEGER_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace icp {

// Arbitrary-precision integer. Values that fit in int64 are stored inline and
// handled with overflow-checked machine arithmetic; larger values live in a
// heap-allocated GMP integer. The representation is canonical: a value is
// held in GMP form only when it does not fit in int64.
class Integer {
 public:
  Integer() = default;
  Integer(int v) : small_(v) {}                       // NOLINT
  Integer(long v) : small_(v) {}                      // NOLINT
  Integer(long long v) : small_(static_cast<int64_t>(v)) {}  // NOLINT
  explicit Integer(const mpz_class& v);

  Integer(const Integer& other)
      : small_(other.small_),
        big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      small_ = other.small_;
      if (other.big_) {
        big_ = std::make_unique<mpz_class>(*other.big_);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  // Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool is_small() const { return !big_; }
  std::optional<int64_t> to_int64() const {
    if (big_) return std::nullopt;
    return small_;
  }
  mpz_class to_mpz() const;
  double to_double() const;
  std::string str() const;

  int sign() const;
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }

  Integer operator-() const;
  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  Integer& operator+=(const Integer& b) { return *this = *this + b; }
  Integer& operator-=(const Integer& b) { return *this = *this - b; }
  Integer& operator*=(const Integer& b) { return *this = *this * b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  // Division rounding toward negative and positive infinity. b != 0.
  friend Integer floor_div(const Integer& a, const Integer& b);
  friend Integer ceil_div(const Integer& a, const Integer& b);
  // True when b divides a. b != 0.
  friend bool divides(const Integer& b, const Integer& a);

  friend Integer abs(const Integer& a);
  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer pow(const Integer& base, unsigned exponent);

  // Largest r with r^n <= x, and smallest r with r^n >= x. For even n the
  // argument must be non-negative. n >= 1.
  friend Integer floor_root(const Integer& x, unsigned n);
  friend Integer ceil_root(const Integer& x, unsigned n);

  size_t hash() const;

 private:
  static Integer from_mpz(mpz_class&& v);
  const mpz_class& big() const { return *big_; }

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

inline int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

inline Integer operator+(const Integer& a, const Integer& b) {
  int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) {
    return Integer(static_cast<long>(r));
  }
  return Integer::from_mpz(a.to_mpz() + b.to_mpz());
}

inline Integer operator-(const Integer& a, const Integer& b) {
  int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) {
    return Integer(static_cast<long>(r));
  }
  return Integer::from_mpz(a.to_mpz() - b.to_mpz());
}

inline Integer operator*(const Integer& a, const Integer& b) {
  int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) {
    return Integer(static_cast<long>(r));
  }
  return Integer::from_mpz(a.to_mpz() * b.to_mpz());
}

inline Integer Integer::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Integer(static_cast<long>(-small_));
  return from_mpz(-to_mpz());
}

inline bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
  return false;
}

inline std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  // A GMP-held value lies outside the int64 range, so its sign decides the
  // comparison against any inline value.
  if (!b.big_) return sgn(*a.big_) <=> 0;
  if (!a.big_) return 0 <=> sgn(*b.big_);
  return cmp(*a.big_, *b.big_) <=> 0;
}

inline Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

inline const Integer& min(const Integer& a, const Integer& b) {
  return b < a ? b : a;
}
inline const Integer& max(const Integer& a, const Integer& b) {
  return a < b ? b : a;
}

struct IntegerHash {
  size_t operator()(const Integer& v) const { return v.hash(); }
};

}  // namespace icp

#endif  // ICP_INTEGER_HPP_
