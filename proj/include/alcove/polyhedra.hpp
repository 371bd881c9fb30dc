// Exact rational polyhedral primitives at small dimension: feasibility with
// a sample point (Fourier-Motzkin elimination), vertex enumeration, and
// generator/inequality conversions for cones in dimension <= 2.

#pragma once

#include <optional>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/vectors.hpp"

namespace alcove {

enum class Rel { Eq, Le, Lt };  // a.x (rel) b

struct LinCon {
  RatVec a;
  Rel rel;
  Rat b;
};

// Feasibility of a conjunction of linear constraints; returns a sample
// solution when feasible. Exact; exponential in dimension, which stays <= 4.
std::optional<RatVec> solve_constraints(std::vector<LinCon> cons, int dim);

inline bool feasible(const std::vector<LinCon>& cons, int dim) {
  return solve_constraints(cons, dim).has_value();
}

// Vertices of {x : a_i.x <= b_i}; assumes the polyhedron is bounded.
std::vector<RatVec> polytope_vertices(const std::vector<LinCon>& cons, int dim);

// A polyhedral cone given by generating rays; lineality is expressed by
// including opposite ray pairs. Dual description available for dim <= 2.
struct ConeSpec {
  int dim = 0;
  std::vector<IntVec> generators;
  std::vector<IntVec> duals;  // supporting functionals, cone = {x : d.x >= 0}

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const { return contains(to_rat(x)); }
};

// Cone from generators; computes the dual description (dim <= 2 only).
ConeSpec make_cone(int dim, std::vector<IntVec> generators);

// Cone {x : row.x >= 0 for each row}; converts to generators (dim <= 2 only).
ConeSpec cone_from_inequalities(int dim, const std::vector<IntVec>& rows);

}  // namespace alcove
