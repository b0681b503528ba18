#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace repsense {

// exact p/q with q > 0, always reduced
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT implicit on purpose
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return double(num_) / double(den_); }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_, __int128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_, __int128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return make(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator<(const Rational& a, const Rational& b) {
    return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) n = -n, d = -d;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) n /= a, d /= a;
    Rational r;
    r.num_ = std::int64_t(n);
    r.den_ = std::int64_t(d);
    return r;
  }
  void normalize() {
    if (den_ < 0) num_ = -num_, den_ = -den_;
    auto g = std::gcd(num_, den_);
    if (g > 1) num_ /= g, den_ /= g;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace repsense
