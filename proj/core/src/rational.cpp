#include "cpx/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace cpx {

namespace {

int128_t gcd_wide(int128_t a, int128_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const int128_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr int128_t kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(int128_t num, int128_t den) {
  if (den == 0) throw std::domain_error("Rational: division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int128_t g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
}

Rational Rational::operator-() const { return from_wide(-static_cast<int128_t>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(static_cast<int128_t>(num_) + rhs.num_, den_);
  } else {
    *this = from_wide(static_cast<int128_t>(num_) * rhs.den_ + static_cast<int128_t>(rhs.num_) * den_,
                      static_cast<int128_t>(den_) * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce first so intermediate products stay small.
  const int128_t g1 = gcd_wide(num_, rhs.den_);
  const int128_t g2 = gcd_wide(rhs.num_, den_);
  const int128_t n = (static_cast<int128_t>(num_) / (g1 ? g1 : 1)) * (rhs.num_ / (g2 ? g2 : 1));
  const int128_t d = (static_cast<int128_t>(den_) / (g2 ? g2 : 1)) * (rhs.den_ / (g1 ? g1 : 1));
  *this = from_wide(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
  Rational inv;
  inv.num_ = rhs.den_;
  inv.den_ = rhs.num_;
  if (inv.den_ < 0) {
    inv.den_ = -inv.den_;
    inv.num_ = -inv.num_;
  }
  return *this *= inv;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace cpx
