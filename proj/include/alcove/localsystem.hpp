// Category labels for points of the arrangement complement, formal functor
// expressions for path generators, path-to-braid-word compilation, and the
// relation verifier for the resulting local system of categories.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alcove/braid.hpp"

namespace alcove {

// ---------- category labels ----------

struct CategoryLabel {
  enum class Kind { Alcove, Point, DMod };
  Kind kind;
  Alcove alcove;        // Kind::Alcove
  std::vector<int> P;   // Kind::Point / Kind::DMod
  RatVec twist;         // Kind::DMod: the twist parameter

  friend bool operator==(const CategoryLabel&, const CategoryLabel&) = default;
  std::string str() const;
};

// ---------- formal functor expressions ----------

// Atoms, with their source -> target typing:
//   Loc    : Alcove(A_l)        -> DMod(P, l)
//   Gamma  : DMod(P, l)         -> Alcove(A_l)
//   Twist  : DMod(P, t)         -> DMod(P, t + nu)
//   DCoh   : DMod(P, 0)         -> Point(P)      (inverted: the reverse)
struct FunctorAtom {
  enum class Kind { Loc, Gamma, Twist, DCoh };
  Kind kind;
  std::vector<int> P;
  RatVec param;   // Loc/Gamma: the alcove basepoint; Twist: the shift nu
  Alcove alcove;  // Loc/Gamma: the alcove
  bool inverted = false;  // DCoh only

  friend bool operator==(const FunctorAtom&, const FunctorAtom&) = default;
  std::string str() const;
};

// Composition chain; the last atom applies first. Empty chain = Id.
struct FunctorExpr {
  std::vector<FunctorAtom> chain;
  bool is_identity() const { return chain.empty(); }
  friend bool operator==(const FunctorExpr&, const FunctorExpr&) = default;
  std::string str() const;
};

FunctorExpr compose_expr(const FunctorExpr& outer, const FunctorExpr& inner);
FunctorExpr inverse_expr(const FunctorExpr& e);

// Checks source/target chaining; throws IllTyped.
void check_typed(const FunctorExpr& e);

// Normal form under Gamma.Loc = Loc.Gamma = Id, Twist(0) = Id,
// Twist(a).Twist(b) = Twist(a+b), DCoh.DCoh^{-1} = Id.
FunctorExpr simplify_functor(FunctorExpr e);

// Equality modulo the identification of refined decompositions of one
// generator through different parabolics (counted, not proven).
struct AxiomComparison {
  bool equal;
  int axiom_uses;
};
AxiomComparison equal_modulo_parabolic_axiom(const FunctorExpr& a,
                                             const FunctorExpr& b);

// ---------- paths ----------

struct CrossToken {
  int dir;
  int side;       // +1: upper wall of the current alcove, -1: lower
  bool positive;  // positive or negative half loop
};

struct PointToken {
  std::vector<int> P;
  bool to_point;  // true: ToPoint, false: FromPoint
  // FromPoint target: cross this wall of the alcove the pair started from;
  // dir < 0 returns to the same alcove.
  int dir = -1;
  int side = +1;
};

using PathToken = std::variant<CrossToken, PointToken>;

struct Path {
  Alcove base;
  std::vector<PathToken> tokens;
};

// ---------- the local system ----------

struct RefinementEntry {
  std::vector<int> P;
  std::vector<PathToken> tokens;  // [ToPoint(P), FromPoint(P)]
};

struct MonodromyResult {
  BraidWord word;
  bool pure;
};

struct CheckRecord {
  std::string id;
  std::string kind;
  bool pass = false;
  std::string verdict;
  std::string certificate;
  int axiom_uses = 0;
};

struct Report {
  std::vector<CheckRecord> checks;
  std::vector<std::string> failures;
};

struct VerifyOptions {
  enum Part : unsigned {
    kSalvetti = 1,
    kIndependence = 2,
    kOrderPositive = 4,
    kPurity = 8,
    kAll = 15,
  };
  Rat window_radius{10};
  unsigned long long seed = 0;
  int jobs = 1;
  int loop_count = 20;
  int loop_max_len = 8;
  unsigned parts = kAll;
  WordEqualOptions word_opts{};
};

class LocalSystem {
public:
  LocalSystem(const RootDatum& rd, std::vector<int> J, Int p);

  const Arrangement& arrangement() const { return arr_; }
  const BraidContext& braid() const { return braid_; }
  const std::vector<std::vector<int>>& parabolic_class() const { return class_; }

  CategoryLabel category_at(const Alcove& a) const;
  CategoryLabel category_at(const std::vector<int>& P) const;  // pt_P

  RatVec basepoint(const Alcove& a) const;  // canonical rational interior point

  FunctorExpr functor_to_point(const Alcove& a, const std::vector<int>& P) const;
  FunctorExpr functor_from_point(const Alcove& a, const std::vector<int>& P) const;
  // Positive crossing a -> b; picks the first order-valid parabolic in the
  // class unless forced. Throws NoValidParabolic.
  FunctorExpr functor_of_crossing(const Alcove& a, const Alcove& b,
                                  std::optional<std::vector<int>> force_P = {}) const;
  FunctorExpr functor_of_path(const Path& p) const;

  std::vector<RefinementEntry> refine_crossing(const Alcove& a, const Alcove& b) const;

  BraidWord braid_word_of_path(const Path& p) const;
  MonodromyResult monodromy(const Path& loop) const;

  // The conjugated crossing functor for the arrangement's own parabolic.
  FunctorExpr conjugated_crossing(const Alcove& a, const Alcove& b) const;

  Report verify(const VerifyOptions& opts) const;

  // Walks the token list, returning the alcove at the end (validates
  // chaining; throws on inconsistent paths).
  Alcove end_alcove(const Path& p) const;

  // Word of the positive crossing a -> b, along the embedded full-arrangement
  // gallery; `alt_gallery` selects a second reduced gallery when one exists.
  BraidWord crossing_word(const Alcove& a, const Alcove& b,
                          bool alt_gallery = false) const;

private:
  Alcove embed_full(const Alcove& a) const;
  struct Salvetti2Flat {
    RatVec point;
    std::vector<Alcove> ring;  // alcoves around the flat in circular order
  };
  std::vector<Salvetti2Flat> codim2_flats(const Rat& radius) const;

  const RootDatum* rd_;
  Int p_;
  Arrangement arr_;
  BraidContext braid_;  // built on the full arrangement of the same datum
  std::vector<std::vector<int>> class_;
};

}  // namespace alcove
