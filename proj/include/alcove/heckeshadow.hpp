// The polynomial representation used as an exactly computable shadow of the
// wall-crossing kernels: the group algebra of the weight lattice over
// Laurent polynomials in v, with T-letters acting by divided-difference
// operators and theta-letters by support translation. Used to separate and
// confirm braid-word identities; exact arithmetic throughout.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "alcove/rootdata.hpp"
#include "alcove/words.hpp"

namespace alcove {

// Finitely supported integer map exponent-of-v -> coefficient.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(Int constant) {
    if (constant != 0) c_[0] = constant;
  }
  static Laurent monomial(Int exp, Int coeff = 1) {
    Laurent l;
    if (coeff != 0) l.c_[exp] = coeff;
    return l;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<Int, Int>& coeffs() const { return c_; }

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  friend bool operator==(const Laurent&, const Laurent&) = default;

  std::string str() const;

private:
  std::map<Int, Int> c_;
};

inline Laurent v_plus() { return Laurent::monomial(1); }    // v
inline Laurent v_minus() { return Laurent::monomial(-1); }  // v^{-1}

// Finitely supported map weight -> Laurent scalar (formal sum of c_w e^w).
class GroupAlgebraElem {
public:
  GroupAlgebraElem() = default;
  static GroupAlgebraElem basis(const IntVec& weight) {
    GroupAlgebraElem f;
    f.t_[weight] = Laurent(1);
    return f;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<IntVec, Laurent>& terms() const { return t_; }

  void add_term(const IntVec& w, const Laurent& c);

  friend GroupAlgebraElem operator+(const GroupAlgebraElem& a,
                                    const GroupAlgebraElem& b);
  friend GroupAlgebraElem operator-(const GroupAlgebraElem& a,
                                    const GroupAlgebraElem& b);
  GroupAlgebraElem scaled(const Laurent& c) const;
  friend bool operator==(const GroupAlgebraElem&, const GroupAlgebraElem&) = default;

  std::string str() const;

private:
  std::map<IntVec, Laurent> t_;
};

// Operator realization of braid letters on the group algebra.
class Shadow {
public:
  explicit Shadow(const RootDatum& rd);

  const RootDatum& root_datum() const { return *rd_; }

  // e^x . f  (support translation by x).
  GroupAlgebraElem apply_theta(const IntVec& x, const GroupAlgebraElem& f) const;

  // T_s f = v s(f) + (v - v^{-1}) (f - s(f)) / (1 - e^{-alpha_s}),
  // s the affine simple reflection of the given type.
  GroupAlgebraElem apply_T(int type, const GroupAlgebraElem& f) const;
  GroupAlgebraElem apply_T_inverse(int type, const GroupAlgebraElem& f) const;

  // Letters applied right to left.
  GroupAlgebraElem apply_word(const BraidWord& w, const GroupAlgebraElem& f) const;

  // Exact agreement of the two word operators on e^lambda for each lambda.
  bool operators_agree(const BraidWord& a, const BraidWord& b,
                       const std::vector<IntVec>& testset) const;
  // First weight where they disagree, if any.
  std::optional<IntVec> separating_weight(const BraidWord& a, const BraidWord& b,
                                          const std::vector<IntVec>& testset) const;

  // Reflection on exponents for letter `type`: the finite s_i, or the
  // level-one affine reflection in the highest-coroot wall.
  IntVec reflect_exponent(int type, const IntVec& w) const;
  // Root direction alpha_s of the letter.
  IntVec letter_root(int type) const;

  // All weights with |coordinates| <= radius (the test ball).
  std::vector<IntVec> ball(Int radius) const;

private:
  const RootDatum* rd_;
  int star_;  // positive-root index of the affine letter's direction
};

// Exact division by (1 - e^{-alpha}); throws InexactDivision when the
// argument is not divisible (an invariant violation for f - s(f)).
GroupAlgebraElem divide_one_minus_exp(const GroupAlgebraElem& g, const IntVec& alpha,
                                      const IntVec& alpha_coroot);

}  // namespace alcove
