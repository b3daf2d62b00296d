/* Copyright 2026 The pmkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "pmkit/errors.hpp"

namespace pmkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Every distance in the library is a Rational; no verdict ever depends on
/// floating point. The text form is always "num/den", e.g. "0/1", "-5/1",
/// "3/4"; parse() also accepts a bare integer.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    // Boost 1.74 rejects negative denominators.
    value_ = den < 0 ? Value(BigInt(-num), BigInt(-den)) : Value(num, den);
  }

  static Rational parse(std::string_view text) {
    auto fail = [&] {
      return ArgumentError("malformed rational '" + std::string(text) +
                           "' (expected num/den)");
    };
    auto parse_int = [&](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      bool neg = false;
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        ++i;
      }
      if (i == s.size()) throw fail();
      BigInt v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw fail();
        v = v * 10 + (s[i] - '0');
      }
      return neg ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true), BigInt(1));
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw fail();
    return Rational(parse_int(text.substr(0, slash), true), den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  std::string to_string() const {
    return numerator().str() + "/" + denominator().str();
  }

  /// Largest integer <= this.
  BigInt floor() const {
    BigInt q, r;
    boost::multiprecision::divide_qr(numerator(), denominator(), q, r);
    if (r < 0) --q;
    return q;
  }
  BigInt ceil() const {
    BigInt f = floor();
    return Rational(f, 1) == *this ? f : BigInt(f + 1);
  }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw ArgumentError("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

  std::size_t hash() const {
    return std::hash<std::string>{}(to_string());
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}
  Value value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// 2^-k as an exact rational.
inline Rational pow2_inverse(unsigned k) {
  return Rational(BigInt(1), BigInt(1) << k);
}

/// The rational with the smallest denominator in the closed interval
/// [lo, hi] (smallest absolute numerator among those). Continued-fraction
/// descent of the Stern-Brocot tree.
inline Rational simplest_between(Rational lo, Rational hi) {
  if (hi < lo) throw ArgumentError("simplest_between: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  BigInt fl = lo.floor();
  Rational fl_r(fl, 1);
  if (fl_r == lo) return lo;
  if (Rational(fl + 1, 1) <= hi) return Rational(fl + 1, 1);
  Rational inner = simplest_between(Rational(1) / (hi - fl_r), Rational(1) / (lo - fl_r));
  return fl_r + Rational(1) / inner;
}

}  // namespace pmkit

template <>
struct std::hash<pmkit::Rational> {
  std::size_t operator()(const pmkit::Rational& r) const { return r.hash(); }
};
