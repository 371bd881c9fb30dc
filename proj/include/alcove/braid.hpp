// The extended affine braid group at level p: elements of the affine Weyl
// group as dot-affine maps, the canonical positive section along reduced
// galleries, and a sound word-equality oracle (projection, positive
// braid-move search, operator-shadow separation).

#pragma once

#include <string>
#include <vector>

#include "alcove/arrangement.hpp"
#include "alcove/heckeshadow.hpp"
#include "alcove/words.hpp"

namespace alcove {

// Element (w, nu) acting by x -> w(x + rho) - rho + nu; nu is stored in
// geometric units (already p-scaled; theta_x projects to nu = p*x).
struct AffineWeylElement {
  std::vector<IntVec> w_matrix;
  IntVec translation;
  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  std::string str() const;
};

enum class Verdict { Equal, Distinct, Unknown };

struct EqualityVerdict {
  Verdict outcome;
  std::string certificate;  // braid-move trace, separating data, or reason
  friend bool operator==(const EqualityVerdict&, const EqualityVerdict&) = default;
};

struct WordEqualOptions {
  Int shadow_radius = 2;
  size_t search_bound = 200000;  // max visited words in the braid-move search
};

class BraidContext {
public:
  BraidContext(const RootDatum& rd, Int p);

  const RootDatum& root_datum() const { return *rd_; }
  const Arrangement& arrangement() const { return arr_; }
  const Shadow& shadow() const { return shadow_; }
  Int p() const { return p_; }

  AffineWeylElement identity() const;
  AffineWeylElement simple_reflection(int type) const;  // 0 = affine
  AffineWeylElement translation_element(const IntVec& nu_geometric) const;
  // a then-applied-to (b applied first): the standard product a.b of maps.
  AffineWeylElement compose(const AffineWeylElement& a,
                            const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& a) const;

  AffineMap to_map(const AffineWeylElement& g) const;
  AffineWeylElement from_map(const AffineMap& m) const;

  IntVec dot_action(const AffineWeylElement& g, const IntVec& lambda) const;

  // Coxeter length: separating hyperplanes between the fundamental alcove
  // and its image.
  Int length(const AffineWeylElement& g) const;

  // Projection of a word, first letter outermost.
  AffineWeylElement project(const BraidWord& w) const;

  // Positive T-word along a reduced gallery from the fundamental alcove to
  // g.A0. Requires g in the reflection subgroup (trivial stabilizer part).
  BraidWord canonical_lift(const AffineWeylElement& g) const;
  BraidWord canonical_lift(const WeylElement& w) const;

  // Order of s_a s_b in the affine Weyl group; 0 means infinite.
  int braid_order(int type_a, int type_b) const;

  EqualityVerdict word_equal(const BraidWord& a, const BraidWord& b,
                             const WordEqualOptions& opts = {}) const;

  // Mixed relations of the lattice presentation: commutation for pairing 0,
  // theta_x = T_s theta_{s(x)} T_s for pairing 1. `finite_type` is 1..rank.
  EqualityVerdict bernstein_check(int finite_type, const IntVec& x,
                                  Int ball_radius = 2) const;

private:
  const RootDatum* rd_;
  Int p_;
  Arrangement arr_;
  Shadow shadow_;
  std::vector<AffineWeylElement> simples_;  // index = type
};

}  // namespace alcove
