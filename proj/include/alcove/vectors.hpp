// Small integer/rational vector helpers shared by all modules.
//
// Weights are integer vectors in fundamental-weight coordinates; coroots
// are integer vectors in simple-coroot coordinates. With these bases the
// weight/coroot pairing is the plain dot product.

#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec operator*(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec operator-(const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline RatVec operator*(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

// gcd of absolute values; 0 for the zero vector.
inline Int content(const IntVec& a) {
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Divides out the content and flips sign so the first nonzero entry is
// positive. Returns {primitive, c} with a == c * primitive.
inline std::pair<IntVec, Rat> primitive_direction(const IntVec& a) {
  Int g = content(a);
  if (g == 0) return {a, Rat(0)};
  IntVec p(a.size());
  Int sign = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    p[i] = a[i] / g;
    if (sign == 0 && p[i] != 0) sign = p[i] > 0 ? 1 : -1;
  }
  if (sign < 0)
    for (auto& x : p) x = -x;
  return {p, Rat(sign * g)};
}

// Clears denominators and primitivizes; zero vector maps to itself.
inline IntVec primitive_of(const RatVec& a) {
  Int den = 1;
  for (const Rat& x : a) den = std::lcm(den, x.den());
  IntVec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = a[i].num() * (den / a[i].den());
  Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline std::string vec_str(const IntVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

inline std::string vec_str(const RatVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

}  // namespace alcove
