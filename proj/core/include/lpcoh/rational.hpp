#ifndef LPCOH_RATIONAL_HPP
#define LPCOH_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "lpcoh/error.hpp"

namespace lpcoh {

/// Exact rational number on 64-bit integers, always kept reduced with a
/// positive denominator. Intermediate products run through 128-bit
/// arithmetic; a result that does not fit in 64 bits after reduction
/// throws ArithmeticOverflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= *this (floor division, exact for negatives).
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorKind::ArithmeticOverflow, "division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Accepts "a", "a/b" and decimal literals like "1.25" (converted exactly).
  static Rational parse(std::string_view text);

  /// "a/b", or just "a" when the denominator is 1.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  void assign(long long num, long long den) {
    if (den == 0) fail(ErrorKind::ArithmeticOverflow, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = num;
    den_ = den;
  }

  static Rational from_i128(i128 num, i128 den) {
    if (den == 0) fail(ErrorKind::ArithmeticOverflow, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 g = gcd128(a, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = i128(INT64_MIN), hi = i128(INT64_MAX);
    if (num < lo || num > hi || den > hi)
      fail(ErrorKind::ArithmeticOverflow, "rational overflows 64 bits");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_;
  long long den_;
};

inline Rational Rational::parse(std::string_view text) {
  auto bad = [&] {
    fail(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) bad();

  auto parse_int = [&](std::string_view s) -> long long {
    if (s.empty()) bad();
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) bad();
    i128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') bad();
      v = v * 10 + (s[i] - '0');
      if (v > i128(INT64_MAX)) fail(ErrorKind::ArithmeticOverflow, "integer literal too large");
    }
    return neg ? -static_cast<long long>(v) : static_cast<long long>(v);
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long n = parse_int(text.substr(0, slash));
    long long d = parse_int(text.substr(slash + 1));
    if (d == 0) bad();
    return Rational(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) bad();
    std::string digits = std::string(text.substr(0, dot)) + std::string(frac);
    long long n = parse_int(digits);
    long long d = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) d *= 10;
    return Rational(n, d);
  }
  return Rational(parse_int(text));
}

}  // namespace lpcoh

#endif
