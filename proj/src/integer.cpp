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

#include "icp/integer.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace icp {

Integer::Integer(const mpz_class& v) { *this = from_mpz(mpz_class(v)); }

Integer Integer::from_mpz(mpz_class&& v) {
  Integer r;
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    r.small_ = mpz_get_si(v.get_mpz_t());
  } else {
    r.big_ = std::make_unique<mpz_class>(std::move(v));
  }
  return r;
}

Integer Integer::parse(std::string_view text) {
  size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("empty integer literal");
  for (size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("malformed integer literal: " +
                                  std::string(text));
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return from_mpz(mpz_class(s, 10));
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  return mpz_class(static_cast<long>(small_));
}

double Integer::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(small_);
}

std::string Integer::str() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) {
  return os << v.str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    int64_t q = a.small_ / b.small_;
    if (a.small_ % b.small_ != 0 && ((a.small_ < 0) != (b.small_ < 0))) --q;
    return Integer(static_cast<long>(q));
  }
  mpz_class q;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer::from_mpz(std::move(q));
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    int64_t q = a.small_ / b.small_;
    if (a.small_ % b.small_ != 0 && ((a.small_ < 0) == (b.small_ < 0))) ++q;
    return Integer(static_cast<long>(q));
  }
  mpz_class q;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_cdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer::from_mpz(std::move(q));
}

bool divides(const Integer& b, const Integer& a) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return true;
    return a.small_ % b.small_ == 0;
  }
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  return mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y != 0) {
      int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(static_cast<long>(x));
  }
  mpz_class g;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer::from_mpz(std::move(g));
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer result(1);
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

namespace {

// True when r^n <= x for r >= 0, x >= 0, all in int64 range.
bool pow_at_most(int64_t r, unsigned n, int64_t x) {
  int64_t acc = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(acc, r, &acc) || acc > x) return false;
  }
  return true;
}

Integer floor_root_nonneg(const Integer& x, unsigned n) {
  if (n == 1) return x;
  if (auto v = x.to_int64()) {
    int64_t value = *v;
    if (value < 2) return x;
    int bits = 64 - __builtin_clzll(static_cast<unsigned long long>(value));
    int k = (bits - 1) / static_cast<int>(n);
    // lo^n <= x < hi^n by construction of the bit-length bracket.
    int64_t lo = int64_t{1} << k;
    int64_t hi = k + 1 >= 63 ? INT64_MAX : (int64_t{1} << (k + 1));
    while (hi - lo > 1) {
      int64_t mid = lo + (hi - lo) / 2;
      if (pow_at_most(mid, n, value)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return Integer(static_cast<long>(lo));
  }
  mpz_class r, big = x.to_mpz();
  mpz_root(r.get_mpz_t(), big.get_mpz_t(), n);
  return Integer(r);
}

}  // namespace

Integer floor_root(const Integer& x, unsigned n) {
  if (n == 0) throw std::domain_error("root of degree zero");
  if (x.sign() >= 0) return floor_root_nonneg(x, n);
  if (n % 2 == 0) throw std::domain_error("even root of a negative integer");
  return -ceil_root(-x, n);
}

Integer ceil_root(const Integer& x, unsigned n) {
  if (n == 0) throw std::domain_error("root of degree zero");
  if (x.sign() >= 0) {
    Integer r = floor_root_nonneg(x, n);
    return pow(r, n) == x ? r : r + Integer(1);
  }
  if (n % 2 == 0) throw std::domain_error("even root of a negative integer");
  return -floor_root(-x, n);
}

size_t Integer::hash() const {
  if (big_) return std::hash<std::string>()(big_->get_str(16));
  return std::hash<int64_t>()(small_);
}

}  // namespace icp
