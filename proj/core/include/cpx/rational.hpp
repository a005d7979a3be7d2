#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cpx {

__extension__ typedef __int128 int128_t;

/// Exact rational number with 64-bit numerator and denominator.
///
/// Every operation is carried out in 128-bit arithmetic and reduced; a result
/// that does not fit back into 64 bits throws std::overflow_error instead of
/// wrapping. The denominator is always positive and gcd(num, den) == 1.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of arithmetic types
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" when the value is an integer.
  std::string str() const;

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const int128_t l = static_cast<int128_t>(a.num_) * b.den_;
    const int128_t r = static_cast<int128_t>(b.num_) * a.den_;
    return l <=> r;
  }

 private:
  static Rational from_wide(int128_t num, int128_t den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace cpx
