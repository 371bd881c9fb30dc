#include "alcove/polyhedra.hpp"

#include <algorithm>
#include <set>

namespace alcove {
namespace {

// Eliminates variable `v` by pairing opposite-sign rows (Fourier-Motzkin).
// Rows must not contain equalities.
std::vector<LinCon> eliminate(const std::vector<LinCon>& rows, int v) {
  std::vector<LinCon> lower, upper, rest;  // lower: a_v > 0 (x_v <= ...)
  for (const auto& r : rows) {
    if (r.a[v].is_zero())
      rest.push_back(r);
    else if (r.a[v] > Rat(0))
      upper.push_back(r);  // x_v <= (b - a'.x')/a_v
    else
      lower.push_back(r);
  }
  for (const auto& lo : lower)
    for (const auto& up : upper) {
      // Combine: up.a_v * lo + (-lo.a_v) * up has zero v-coefficient.
      Rat cl = up.a[v];
      Rat cu = -lo.a[v];
      LinCon c;
      c.a.resize(lo.a.size());
      for (size_t i = 0; i < lo.a.size(); ++i) c.a[i] = cl * lo.a[i] + cu * up.a[i];
      c.b = cl * lo.b + cu * up.b;
      c.rel = (lo.rel == Rel::Lt || up.rel == Rel::Lt) ? Rel::Lt : Rel::Le;
      rest.push_back(c);
    }
  return rest;
}

bool trivially_true(const LinCon& c) {
  for (const auto& x : c.a)
    if (!x.is_zero()) return false;
  return c.rel == Rel::Lt ? Rat(0) < c.b : !(c.b < Rat(0));
}

bool trivially_false(const LinCon& c) {
  for (const auto& x : c.a)
    if (!x.is_zero()) return false;
  return c.rel == Rel::Lt ? !(Rat(0) < c.b) : c.b < Rat(0);
}

}  // namespace

std::optional<RatVec> solve_constraints(std::vector<LinCon> cons, int dim) {
  // Substitute out equalities first.
  std::vector<std::pair<int, LinCon>> pivots;  // (variable, defining row)
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cons.size(); ++i) {
      if (cons[i].rel != Rel::Eq) continue;
      LinCon eq = cons[i];
      cons.erase(cons.begin() + i);
      int pv = -1;
      for (int v = 0; v < dim; ++v)
        if (!eq.a[v].is_zero()) {
          pv = v;
          break;
        }
      if (pv < 0) {
        if (!eq.b.is_zero()) return std::nullopt;  // 0 = nonzero
        changed = true;
        break;
      }
      // x_pv = (b - sum_{j!=pv} a_j x_j) / a_pv ; substitute everywhere.
      for (auto& r : cons) {
        if (r.a[pv].is_zero()) continue;
        Rat f = r.a[pv] / eq.a[pv];
        for (int v = 0; v < dim; ++v) r.a[v] -= f * eq.a[v];
        r.b -= f * eq.b;
      }
      pivots.emplace_back(pv, eq);
      changed = true;
      break;
    }
  }

  // Eliminate remaining variables one at a time, remembering each stage.
  std::vector<std::vector<LinCon>> stages;  // stages[k]: rows before eliminating var k... reversed
  std::vector<int> order;
  std::vector<LinCon> rows = cons;
  for (int v = dim - 1; v >= 0; --v) {
    stages.push_back(rows);
    order.push_back(v);
    rows = eliminate(rows, v);
  }
  for (const auto& r : rows) {
    if (trivially_false(r)) return std::nullopt;
    if (!trivially_true(r)) return std::nullopt;  // unexpected leftover
  }

  // Back-substitute: pick each variable inside its residual interval.
  RatVec x(dim, Rat(0));
  for (int k = (int)order.size() - 1; k >= 0; --k) {
    int v = order[k];
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : stages[k]) {
      if (r.a[v].is_zero()) continue;
      Rat rhs = r.b;
      for (int u = 0; u < dim; ++u)
        if (u != v) rhs -= r.a[u] * x[u];
      Rat bound = rhs / r.a[v];
      bool strict = (r.rel == Rel::Lt);
      if (r.a[v] > Rat(0)) {  // x_v <= bound
        if (!hi || bound < *hi) {
          hi = bound;
          hi_strict = strict;
        } else if (bound == *hi && strict) {
          hi_strict = true;
        }
      } else {  // x_v >= bound
        if (!lo || *lo < bound) {
          lo = bound;
          lo_strict = strict;
        } else if (bound == *lo && strict) {
          lo_strict = true;
        }
      }
    }
    Rat val;
    if (lo && hi) {
      if (*hi < *lo) return std::nullopt;
      if (*lo == *hi) {
        if (lo_strict || hi_strict) return std::nullopt;
        val = *lo;
      } else {
        val = (*lo + *hi) / Rat(2);
      }
    } else if (lo) {
      val = lo_strict ? *lo + Rat(1) : *lo;
    } else if (hi) {
      val = hi_strict ? *hi - Rat(1) : *hi;
    } else {
      val = Rat(0);
    }
    x[v] = val;
  }

  // Solve pivoted equalities in reverse order of substitution.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [pv, eq] = *it;
    Rat rhs = eq.b;
    for (int u = 0; u < dim; ++u)
      if (u != pv) rhs -= eq.a[u] * x[u];
    x[pv] = rhs / eq.a[pv];
  }
  return x;
}

std::vector<RatVec> polytope_vertices(const std::vector<LinCon>& cons, int dim) {
  // Intersect all dim-subsets of bounding hyperplanes; keep feasible points.
  size_t m = cons.size();
  std::vector<RatVec> verts;
  std::vector<int> idx(dim);
  auto solve_square = [&](const std::vector<int>& rows) -> std::optional<RatVec> {
    // Gaussian elimination on the dim x dim system.
    std::vector<RatVec> a(dim, RatVec(dim + 1, Rat(0)));
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) a[r][c] = cons[rows[r]].a[c];
      a[r][dim] = cons[rows[r]].b;
    }
    for (int col = 0; col < dim; ++col) {
      int piv = -1;
      for (int r = col; r < dim; ++r)
        if (!a[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return std::nullopt;
      std::swap(a[col], a[piv]);
      for (int r = 0; r < dim; ++r) {
        if (r == col || a[r][col].is_zero()) continue;
        Rat f = a[r][col] / a[col][col];
        for (int c = col; c <= dim; ++c) a[r][c] -= f * a[col][c];
      }
    }
    RatVec x(dim);
    for (int r = 0; r < dim; ++r) x[r] = a[r][dim] / a[r][r];
    return x;
  };

  if (m < (size_t)dim) return verts;
  std::vector<bool> select(m, false);
  std::fill(select.end() - dim, select.end(), true);
  do {
    std::vector<int> rows;
    for (size_t i = 0; i < m; ++i)
      if (select[i]) rows.push_back((int)i);
    auto x = solve_square(rows);
    if (!x) continue;
    bool ok = true;
    for (const auto& c : cons) {
      Rat v = dot(c.a, *x);
      if (c.rel == Rel::Eq ? !(v == c.b) : c.b < v) ok = false;
      if (!ok) break;
    }
    if (ok && std::find(verts.begin(), verts.end(), *x) == verts.end())
      verts.push_back(*x);
  } while (std::next_permutation(select.begin(), select.end()));
  std::sort(verts.begin(), verts.end(),
            [](const RatVec& a, const RatVec& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end());
            });
  return verts;
}

bool ConeSpec::contains(const RatVec& x) const {
  // x = sum t_j g_j with t >= 0: feasibility in the t variables.
  int n = (int)generators.size();
  if (n == 0) return is_zero(x);
  std::vector<LinCon> cons;
  for (int c = 0; c < dim; ++c) {
    LinCon eq;
    eq.a.resize(n);
    for (int j = 0; j < n; ++j) eq.a[j] = Rat(generators[j][c]);
    eq.rel = Rel::Eq;
    eq.b = x[c];
    cons.push_back(eq);
  }
  for (int j = 0; j < n; ++j) {
    LinCon ge;
    ge.a.assign(n, Rat(0));
    ge.a[j] = Rat(-1);
    ge.rel = Rel::Le;
    ge.b = Rat(0);
    cons.push_back(ge);
  }
  return feasible(cons, n);
}

namespace {

// Angular comparator for nonzero 2d integer vectors (exact, by quadrant
// then cross product).
int half_of(const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

bool angle_less(const IntVec& a, const IntVec& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  Int cross = a[0] * b[1] - a[1] * b[0];
  return cross > 0;
}

}  // namespace

ConeSpec make_cone(int dim, std::vector<IntVec> generators) {
  ConeSpec c;
  c.dim = dim;
  for (auto& g : generators) {
    if (is_zero(g)) throw Error("make_cone: zero generator");
    auto [p, s] = primitive_direction(g);
    if (s < Rat(0))
      c.generators.push_back(-p);
    else
      c.generators.push_back(p);
  }
  std::sort(c.generators.begin(), c.generators.end());
  c.generators.erase(std::unique(c.generators.begin(), c.generators.end()),
                     c.generators.end());
  if (dim > 2) return c;  // generators only; dual left empty

  if (dim == 1) {
    bool pos = false, neg = false;
    for (const auto& g : c.generators) (g[0] > 0 ? pos : neg) = true;
    if (pos && neg) {
      // full line: no supporting functionals
    } else if (pos) {
      c.duals.push_back({1});
    } else if (neg) {
      c.duals.push_back({-1});
    } else {
      c.duals.push_back({1});
      c.duals.push_back({-1});
    }
    return c;
  }

  // dim == 2
  if (c.generators.empty()) {
    c.duals = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    return c;
  }
  auto gens = c.generators;
  std::sort(gens.begin(), gens.end(), angle_less);
  // Detect lineality: a pair of opposite generators, or angular spread >= pi.
  auto cross = [](const IntVec& a, const IntVec& b) {
    return a[0] * b[1] - a[1] * b[0];
  };
  auto dot2 = [](const IntVec& a, const IntVec& b) {
    return a[0] * b[0] + a[1] * b[1];
  };
  if (gens.size() == 1) {
    const auto& g = gens[0];
    c.duals.push_back({g[0], g[1]});          // along the ray
    c.duals.push_back({-g[1], g[0]});         // the two sides of the line
    c.duals.push_back({g[1], -g[0]});
    return c;
  }
  // Find the extreme pair: generators g_i, g_j such that every generator lies
  // in the closed positive span. Try all ordered pairs.
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      const auto& lo = gens[i];
      const auto& hi = gens[j];
      Int cr = cross(lo, hi);
      if (cr < 0) continue;
      if (cr == 0 && dot2(lo, hi) > 0) continue;  // same ray
      bool all_in = true;
      if (cr == 0) {
        // Opposite rays: candidate half-plane or line; handled below.
        continue;
      }
      for (const auto& g : gens) {
        if (cross(lo, g) < 0 || cross(g, hi) < 0) all_in = false;
      }
      if (all_in) {
        c.duals.push_back({-lo[1], lo[0]});  // inward normal of the lo edge
        c.duals.push_back({hi[1], -hi[0]});  // inward normal of the hi edge
        return c;
      }
    }
  }
  // No pointed span: cone contains a line. Half-plane or whole plane.
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      if (cross(gens[i], gens[j]) != 0 || dot2(gens[i], gens[j]) >= 0) continue;
      // gens[i], gens[j] opposite: line through them; which side has points?
      IntVec n = {-gens[i][1], gens[i][0]};
      bool pos = false, neg = false;
      for (const auto& g : gens) {
        Int s = n[0] * g[0] + n[1] * g[1];
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (pos && neg) {
        return c;  // whole plane: no duals
      }
      if (neg) n = {-n[0], -n[1]};
      c.duals.push_back(n);
      return c;
    }
  return c;  // spread >= pi without opposite pair: whole plane
}

ConeSpec cone_from_inequalities(int dim, const std::vector<IntVec>& rows) {
  if (dim > 2) throw NotSupported("cone_from_inequalities: dim > 2");
  std::vector<IntVec> gens;
  if (dim == 1) {
    bool pos_ok = true, neg_ok = true;
    for (const auto& r : rows) {
      if (r[0] < 0) pos_ok = false;
      if (r[0] > 0) neg_ok = false;
    }
    if (pos_ok) gens.push_back({1});
    if (neg_ok) gens.push_back({-1});
    return make_cone(1, gens);
  }
  // dim == 2: candidate extreme rays are the boundary directions of each
  // constraint line plus coordinate fallbacks; keep those satisfying all rows.
  std::vector<IntVec> cands = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                               {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (const auto& r : rows) {
    if (is_zero(r)) continue;
    cands.push_back({-r[1], r[0]});
    cands.push_back({r[1], -r[0]});
  }
  for (const auto& v : cands) {
    bool ok = true;
    for (const auto& r : rows)
      if (r[0] * v[0] + r[1] * v[1] < 0) ok = false;
    if (ok) gens.push_back(v);
  }
  if (gens.empty()) {
    ConeSpec c;
    c.dim = 2;
    c.duals = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    return c;
  }
  auto cone = make_cone(2, gens);
  // Prune non-extreme generators: g is redundant if it lies in the cone of
  // the others.
  std::vector<IntVec> extreme;
  for (size_t i = 0; i < cone.generators.size(); ++i) {
    ConeSpec rest;
    rest.dim = 2;
    for (size_t j = 0; j < cone.generators.size(); ++j)
      if (j != i) rest.generators.push_back(cone.generators[j]);
    if (rest.generators.empty() || !rest.contains(cone.generators[i]))
      extreme.push_back(cone.generators[i]);
  }
  return make_cone(2, extreme);
}

}  // namespace alcove
