// Exact rational arithmetic on 64-bit integers with overflow checks.
// All geometry in this project runs on Rat; there is no floating point.

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace alcove {

using Int = long long;

class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}
  Rat(Int n, Int d) : num_(n), den_(d) { normalize(); }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
               checked(i128(a.den_) * b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Largest integer <= value.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

  // Parses "n" or "n/d".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

private:
  using i128 = __int128;

  static Int checked(i128 v) {
    if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<Int>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

// lcm over positive rationals: lcm(a/b, c/d) = lcm(a,c)/gcd(b,d).
inline Rat rat_lcm(const Rat& a, const Rat& b) {
  Int n = std::lcm(a.num(), b.num());
  Int d = std::gcd(a.den(), b.den());
  return Rat(n, d);
}

// value mod m into [0, m), m > 0.
inline Rat rat_mod(const Rat& v, const Rat& m) {
  Rat q = v / m;
  return v - Rat(q.floor()) * m;
}

}  // namespace alcove
