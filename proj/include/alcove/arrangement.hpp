// The level-p affine hyperplane arrangement on Lambda_L (x) Q.
//
// Hyperplanes are the loci <lambda + rho, alpha^vee> = n*p restricted to the
// Levi subspace V. Restricted hyperplanes are grouped by primitive direction
// functional; the offsets of one direction form a finite union of arithmetic
// progressions, stored as a periodic offset set. An alcove is the integer
// vector whose entry for a direction counts, with sign, the walls of that
// direction between the base level 0 and the alcove; for the full (J empty)
// arrangement this is floor(<lambda + rho, alpha^vee> / p).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alcove/polyhedra.hpp"
#include "alcove/rootdata.hpp"

namespace alcove {

// Periodic set of rationals: union over residues of {r + k*period}.
class OffsetSet {
public:
  OffsetSet() = default;

  void add_progression(const Rat& step, const Rat& phase);

  const Rat& period() const { return period_; }
  const std::vector<Rat>& residues() const { return residues_; }

  bool contains(const Rat& x) const;
  // Signed number of offsets between 0 and x (gap index of x).
  Int index_of(const Rat& x) const;
  // Largest offset < x, smallest offset > x.
  Rat below(const Rat& x) const;
  Rat above(const Rat& x) const;
  // Bounds (lo, hi) of the k-th gap; gap 0 contains 0.
  std::pair<Rat, Rat> gap(Int k) const;

private:
  Rat period_{0};
  std::vector<Rat> residues_;
};

struct DirectionSource {
  int root_index;  // index into RootDatum::positive_roots()
  Rat scale;       // <x, alpha^vee> restricted to V equals scale * phi(x)
};

struct Direction {
  IntVec phi;  // primitive functional on V coordinates
  OffsetSet offsets;
  std::vector<DirectionSource> sources;
};

struct Alcove {
  IntVec k;
  friend bool operator==(const Alcove& a, const Alcove& b) { return a.k == b.k; }
  friend auto operator<=>(const Alcove& a, const Alcove& b) { return a.k <=> b.k; }
};

struct Wall {
  int dir;
  Rat offset;
  std::string id() const { return std::to_string(dir) + ":" + offset.str(); }
};

struct NeighborEntry {
  Wall wall;
  int side;  // +1: wall is the upper wall of the source alcove
  Alcove alcove;
};

// Affine map x -> M x + t on full weight coordinates (integral).
struct AffineMap {
  std::vector<IntVec> m;
  IntVec t;

  static AffineMap identity(int n);
  RatVec apply(const RatVec& x) const;
  IntVec apply(const IntVec& x) const;
  // this ∘ other (other applied first).
  AffineMap after(const AffineMap& other) const;
  AffineMap inverse() const;
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.m == b.m && a.t == b.t;
  }
};

struct TransporterResult {
  AffineMap map;                 // the unique group element, as a dot-affine map
  std::vector<IntVec> weyl_matrix;  // finite part acting on weight coordinates
  IntVec translation;            // nu with g = (w, nu), x -> w(x+rho)-rho+nu
  std::vector<int> gallery_types;  // crossing types along one reduced gallery
  std::vector<Wall> gallery_walls;
  Int separations;               // number of separating hyperplanes
};

class Arrangement {
public:
  Arrangement(const RootDatum& rd, std::vector<int> J, Int p);

  const RootDatum& root_datum() const { return *rd_; }
  const std::vector<int>& J() const { return J_; }
  Int p() const { return p_; }
  int dim() const { return (int)vcoords_.size(); }
  const std::vector<int>& vcoords() const { return vcoords_; }
  const std::vector<Direction>& directions() const { return dirs_; }

  // Restriction of a coroot functional to V coordinates.
  IntVec restrict_functional(const IntVec& coroot) const;

  Rat pairing(const RatVec& point, int dir) const;  // phi_dir(point)

  Alcove locate(const RatVec& point) const;  // throws OnWall
  bool is_alcove(const Alcove& a) const;     // open polytope nonempty
  RatVec interior_point(const Alcove& a) const;

  std::vector<LinCon> alcove_constraints(const Alcove& a, bool closed) const;

  std::vector<NeighborEntry> walls_and_neighbors(const Alcove& a) const;

  // All alcoves whose closure meets the box |x_i| <= radius, sorted.
  std::vector<Alcove> enumerate_window(const Rat& radius) const;

  Int separation(const Alcove& a, const Alcove& b) const;

  // cl(b) inside cl(a) + C, by exact feasibility over the cone coefficients.
  bool cone_order(const Alcove& a, const Alcove& b, const ConeSpec& c) const;

  // Primitive normal of the shared wall oriented from a toward b.
  IntVec positive_normal(const Alcove& a, const Alcove& b) const;
  bool half_loop_in(const Alcove& a, const Alcove& b, const ConeSpec& c) const;

  // Restricted dominance cone of a parabolic subset J' inside V:
  // {v in V : <v, alpha_i^vee> >= 0 for i not in J'} (dim <= 2).
  ConeSpec parabolic_cone_in_v(const std::vector<int>& Jprime) const;

  // --- full arrangement only (J empty) ---

  Alcove fundamental_alcove() const;
  // Reflection in the wall, as a dot-affine map on weight coordinates.
  AffineMap wall_reflection(const Wall& w) const;
  // Walk from `a` to `b`: crossed walls, visited alcoves, crossing types.
  // `reverse_preference` flips the tie-breaking order among separating
  // facets, which can select a different reduced gallery.
  struct WalkStep {
    Wall wall;
    Alcove to;
    int type;  // 0 = affine, 1..rank = finite simple
  };
  std::vector<WalkStep> walk(const Alcove& a, const Alcove& b,
                             bool reverse_preference = false) const;
  // Trivialization: the unique element mapping the fundamental alcove to `a`.
  AffineMap trivialization(const Alcove& a) const;
  // Crossing type of a wall of alcove `a` (W_aff-orbit of the wall pulled
  // back through the trivialization of `a`).
  int wall_type(const Alcove& a, const Wall& w) const;

  TransporterResult alcove_transporter(const Alcove& a, const Alcove& b) const;

  Alcove image_alcove(const AffineMap& g, const Alcove& a) const;

  // Fundamental-wall table: (dir, offset, type).
  struct FundamentalWall {
    Wall wall;
    int type;
  };
  const std::vector<FundamentalWall>& fundamental_walls() const {
    return fundamental_walls_;
  }

private:
  void require_full(const char* op) const;
  std::optional<Alcove> locate_impl(const RatVec& point,
                                    std::vector<std::string>* walls) const;
  int wall_type_from_triv(const AffineMap& triv, const Wall& w) const;

  const RootDatum* rd_;
  std::vector<int> J_;
  Int p_;
  std::vector<int> vcoords_;
  std::vector<Direction> dirs_;
  std::vector<FundamentalWall> fundamental_walls_;
};

}  // namespace alcove
