// Copyright 2026 The hyperspace Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hyperspace/error.hpp"

namespace hyperspace {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Intermediate products are formed in 128 bits and reduced before being
/// narrowed; any result that does not fit throws OverflowError instead of
/// wrapping. The denominator is always positive and gcd(num, den) == 1.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p" or "p/q".
  static std::optional<Rational> parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    using I = __int128;
    return reduce(I{a.num_} * b.den_ + I{b.num_} * a.den_, I{a.den_} * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using I = __int128;
    return reduce(I{a.num_} * b.den_ - I{b.num_} * a.den_, I{a.den_} * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using I = __int128;
    return reduce(I{a.num_} * b.num_, I{a.den_} * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    using I = __int128;
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return reduce(I{a.num_} * b.den_, I{a.den_} * b.num_);
  }
  Rational operator-() const { return reduce(-static_cast<__int128>(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    using I = __int128;
    I lhs = I{a.num_} * b.den_;
    I rhs = I{b.num_} * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    return reduce(n, d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational reduce(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax) {
      throw OverflowError("rational arithmetic overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<std::int64_t> {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    if (allow_sign && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 18) return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text, true);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash), true);
  auto d = parse_int(text.substr(slash + 1), false);
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// A nonnegative rational or +infinity.
class ExtendedDistance {
 public:
  ExtendedDistance(Rational value) : value_(value) {}  // NOLINT
  static ExtendedDistance infinity() { return ExtendedDistance(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  const Rational& value() const { return *value_; }

  std::string str() const { return value_ ? value_->str() : "inf"; }

  friend ExtendedDistance operator+(const ExtendedDistance& a, const ExtendedDistance& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedDistance(*a.value_ + *b.value_);
  }
  friend bool operator==(const ExtendedDistance& a, const ExtendedDistance& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedDistance& a,
                                          const ExtendedDistance& b) {
    if (a.is_infinite()) {
      return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    }
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.value_ <=> *b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedDistance& d) {
    return os << d.str();
  }

 private:
  ExtendedDistance() = default;
  std::optional<Rational> value_;
};

}  // namespace hyperspace
