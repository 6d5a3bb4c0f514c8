// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_RATIONAL_HPP
#define MOBB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace mobb {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd 1, positive denominator). Used for constraint data so feasibility
/// checks stay exact; intermediate products run in 128-bit and overflow
/// throws instead of wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator) : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& other) { return *this = *this + other; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = wide_gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static __int128 wide_gcd(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace mobb

#endif  // MOBB_RATIONAL_HPP
