// Words in the extended affine braid group: letters T_s^{+-1} for the
// simple affine reflections (type 0 = affine) and lattice letters theta_x.
// A word [l1, ..., ln] stands for the product l1 * l2 * ... * ln; operators
// and group elements attached to a word apply its letters right to left.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "alcove/vectors.hpp"

namespace alcove {

struct TLetter {
  int type;  // 0 = affine, 1..rank = finite simple reflections
  int sign;  // +1 or -1
  friend bool operator==(const TLetter&, const TLetter&) = default;
};

struct ThetaLetter {
  IntVec x;  // lattice element (Bernstein normalization, not p-scaled)
  friend bool operator==(const ThetaLetter&, const ThetaLetter&) = default;
};

using Letter = std::variant<TLetter, ThetaLetter>;

struct BraidWord {
  std::vector<Letter> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool positive() const;  // only T-letters with sign +1
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string str() const;
};

BraidWord multiply(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);

// Free cancellation of T_s T_s^{-1} pairs and merging of adjacent theta
// letters (dropping theta_0). Idempotent.
BraidWord free_reduce(BraidWord w);

inline BraidWord t_word(std::vector<int> types) {
  BraidWord w;
  for (int t : types) w.letters.push_back(TLetter{t, +1});
  return w;
}

inline BraidWord theta_word(IntVec x) {
  BraidWord w;
  w.letters.push_back(ThetaLetter{std::move(x)});
  return w;
}

}  // namespace alcove
