#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

#include "dmt/error.hpp"

namespace dmt {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Values are kept normalized (gcd == 1, denominator > 0). Intermediates use
/// 128-bit arithmetic; results that do not fit 64 bits throw ErrorKind::overflow.
/// There is deliberately no conversion to floating point.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(int64_t num, int64_t den) {
    *this = normalized(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  /// Parses an integer ("12"), a decimal literal ("-4.5", ".25") or a
  /// fraction "p/q".
  static Rational parse(std::string_view text);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return normalized(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                      i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return normalized(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                      i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return normalized(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = i128(a.num_) * b.den_;
    const __int128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational normalized(i128 num, i128 den) {
    if (den == 0) throw Error(ErrorKind::parse, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) den = 1;
    const i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = INT64_MIN;
    constexpr i128 hi = INT64_MAX;
    if (num < lo || num > hi || den > hi)
      throw Error(ErrorKind::overflow, "rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<int64_t>(num);
    r.den_ = static_cast<int64_t>(den);
    return r;
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    throw Error(ErrorKind::parse, "empty rational literal");
  text = text.substr(begin, end - begin + 1);

  const auto fail = [&] {
    throw Error(ErrorKind::parse, "bad rational literal '" + std::string(text) + "'");
  };

  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  i128 int_part = 0;
  size_t int_digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    int_part = int_part * 10 + (text[pos] - '0');
    if (int_part > i128(INT64_MAX)) fail();
    ++pos;
    ++int_digits;
  }

  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (int_digits == 0 || pos >= text.size()) fail();
    i128 den_part = 0;
    size_t den_digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      den_part = den_part * 10 + (text[pos] - '0');
      if (den_part > i128(INT64_MAX)) fail();
      ++pos;
      ++den_digits;
    }
    if (den_digits == 0 || pos != text.size()) fail();
    return normalized(negative ? -int_part : int_part, den_part);
  }

  i128 scale = 1;
  i128 frac_part = 0;
  size_t frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      frac_part = frac_part * 10 + (text[pos] - '0');
      scale *= 10;
      if (scale > i128(INT64_MAX)) fail();
      ++pos;
      ++frac_digits;
    }
  }
  if (pos != text.size() || (int_digits == 0 && frac_digits == 0)) fail();

  i128 num = int_part * scale + frac_part;
  return normalized(negative ? -num : num, scale);
}

}  // namespace dmt
