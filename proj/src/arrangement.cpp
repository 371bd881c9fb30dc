#include "alcove/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace alcove {
namespace {

// Number of integers in the open interval (lo, hi).
Int count_int_open(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) return 0;
  Int f = hi.floor();
  if (Rat(f) == hi) --f;
  Int c = -((-lo).floor());  // ceil(lo)
  if (Rat(c) == lo) ++c;
  return f >= c ? f - c + 1 : 0;
}

}  // namespace

void OffsetSet::add_progression(const Rat& step, const Rat& phase) {
  Rat q = period_.is_zero() ? step : rat_lcm(period_, step);
  std::set<Rat> rs;
  for (const Rat& r : residues_)
    for (Rat x = r; x < q; x += period_) rs.insert(x);
  for (Rat x = rat_mod(phase, step); x < q; x += step) rs.insert(x);
  period_ = q;
  residues_.assign(rs.begin(), rs.end());
}

bool OffsetSet::contains(const Rat& x) const {
  Rat r = rat_mod(x, period_);
  return std::binary_search(residues_.begin(), residues_.end(), r);
}

Int OffsetSet::index_of(const Rat& x) const {
  Int n = 0;
  for (const Rat& r : residues_) {
    // offsets r + k*period in (0, x) resp. (x, 0)
    if (Rat(0) < x) {
      // 0 < r + kq < x  <=>  -r/q < k < (x-r)/q
      n += count_int_open(-r / period_, (x - r) / period_);
    } else if (x < Rat(0)) {
      n -= count_int_open((x - r) / period_, -r / period_);
    }
  }
  return n;
}

Rat OffsetSet::below(const Rat& x) const {
  bool have = false;
  Rat best(0);
  for (const Rat& r : residues_) {
    // largest k with r + kq < x
    Rat k = (x - r) / period_;
    Int kk = k.floor();
    if (Rat(kk) == k) --kk;
    Rat v = r + Rat(kk) * period_;
    if (!have || best < v) {
      best = v;
      have = true;
    }
  }
  return best;
}

Rat OffsetSet::above(const Rat& x) const {
  bool have = false;
  Rat best(0);
  for (const Rat& r : residues_) {
    Rat k = (x - r) / period_;
    Int kk = k.floor() + 1;
    Rat v = r + Rat(kk) * period_;
    if (!(x < v)) v += period_;
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

std::pair<Rat, Rat> OffsetSet::gap(Int k) const {
  Rat lo = below(Rat(0));
  Rat hi = above(Rat(0));
  while (k > 0) {
    lo = hi;
    hi = above(lo);
    --k;
  }
  while (k < 0) {
    hi = lo;
    lo = below(hi);
    ++k;
  }
  return {lo, hi};
}

AffineMap AffineMap::identity(int n) {
  AffineMap g;
  g.m.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) g.m[i][i] = 1;
  g.t.assign(n, 0);
  return g;
}

RatVec AffineMap::apply(const RatVec& x) const {
  int n = (int)t.size();
  RatVec r(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r[i] += Rat(m[i][j]) * x[j];
    r[i] += Rat(t[i]);
  }
  return r;
}

IntVec AffineMap::apply(const IntVec& x) const {
  int n = (int)t.size();
  IntVec r(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r[i] += m[i][j] * x[j];
    r[i] += t[i];
  }
  return r;
}

AffineMap AffineMap::after(const AffineMap& o) const {
  int n = (int)t.size();
  AffineMap g;
  g.m.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g.m[i][j] += m[i][k] * o.m[k][j];
  g.t = apply(o.t);
  return g;
}

AffineMap AffineMap::inverse() const {
  // Weyl-type matrices are invertible over the integers (det = +-1).
  int n = (int)t.size();
  std::vector<RatVec> a(n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("AffineMap::inverse: singular matrix");
    std::swap(a[col], a[piv]);
    Rat d = a[col][col];
    for (int c = 0; c < 2 * n; ++c) a[col][c] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  AffineMap g;
  g.m.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = a[i][n + j];
      if (!v.is_integer()) throw Error("AffineMap::inverse: non-integral");
      g.m[i][j] = v.num();
    }
  // inverse translation: -M^{-1} t
  g.t.assign(n, 0);
  IntVec mt = g.apply(t);
  for (int i = 0; i < n; ++i) g.t[i] = -mt[i];
  return g;
}

Arrangement::Arrangement(const RootDatum& rd, std::vector<int> J, Int p)
    : rd_(&rd), J_(std::move(J)), p_(p) {
  std::sort(J_.begin(), J_.end());
  if (p_ <= rd.coxeter_number())
    throw LevelTooSmall("level p = " + std::to_string(p_) +
                        " must exceed the Coxeter number " +
                        std::to_string(rd.coxeter_number()));
  std::set<int> inJ(J_.begin(), J_.end());
  for (int j : J_)
    if (j < 0 || j >= rd.rank()) throw Error("arrangement: J index out of range");
  for (int i = 0; i < rd.rank(); ++i)
    if (!inJ.count(i)) vcoords_.push_back(i);

  // Group hyperplane families by primitive restricted direction.
  std::map<IntVec, Direction> by_phi;
  const auto& pos = rd.positive_roots();
  for (size_t ri = 0; ri < pos.size(); ++ri) {
    IntVec r = restrict_functional(pos[ri].coroot);
    if (is_zero(r)) continue;  // family misses V (no codimension-1 trace)
    auto [phi, scale] = primitive_direction(r);
    Int c = pos[ri].coroot_height();  // <rho, alpha^vee>
    auto& d = by_phi[phi];
    d.phi = phi;
    // <x, alpha^vee> = scale * phi(x); walls at phi(x) = (n p - c)/scale.
    d.offsets.add_progression(abs(Rat(p_) / scale), Rat(-c) / scale);
    d.sources.push_back({(int)ri, scale});
  }
  for (auto& [phi, d] : by_phi) {
    if (d.offsets.contains(Rat(0)))
      throw Error("arrangement: zero lies on a wall (unexpected for p > h)");
    dirs_.push_back(std::move(d));
  }

  if (J_.empty()) {
    // Fundamental walls: simple lower walls + the level-one wall of the
    // highest coroot.
    auto dir_of = [&](const IntVec& coroot) {
      auto [phi, s] = primitive_direction(restrict_functional(coroot));
      for (size_t i = 0; i < dirs_.size(); ++i)
        if (dirs_[i].phi == phi) return (int)i;
      throw Error("arrangement: direction not found");
    };
    int star = rd.highest_coroot_index();
    const Root& hi = rd.positive_roots()[star];
    fundamental_walls_.push_back(
        {{dir_of(hi.coroot), Rat(p_ - hi.coroot_height())}, 0});
    for (int i = 0; i < rd.rank(); ++i)
      fundamental_walls_.push_back({{dir_of(rd.simple_coroot(i)), Rat(-1)}, i + 1});
  }
}

IntVec Arrangement::restrict_functional(const IntVec& coroot) const {
  IntVec r(vcoords_.size());
  for (size_t i = 0; i < vcoords_.size(); ++i) r[i] = coroot[vcoords_[i]];
  return r;
}

Rat Arrangement::pairing(const RatVec& point, int dir) const {
  return dot(point, dirs_[dir].phi);
}

std::optional<Alcove> Arrangement::locate_impl(
    const RatVec& point, std::vector<std::string>* walls) const {
  Alcove a;
  a.k.resize(dirs_.size());
  bool on_wall = false;
  for (size_t i = 0; i < dirs_.size(); ++i) {
    Rat v = pairing(point, (int)i);
    if (dirs_[i].offsets.contains(v)) {
      on_wall = true;
      if (walls) walls->push_back(Wall{(int)i, v}.id());
      continue;
    }
    a.k[i] = dirs_[i].offsets.index_of(v);
  }
  if (on_wall) return std::nullopt;
  return a;
}

Alcove Arrangement::locate(const RatVec& point) const {
  if ((int)point.size() != dim()) throw Error("locate: wrong dimension");
  std::vector<std::string> walls;
  auto a = locate_impl(point, &walls);
  if (!a) throw OnWall(walls);
  return *a;
}

std::vector<LinCon> Arrangement::alcove_constraints(const Alcove& a,
                                                    bool closed) const {
  std::vector<LinCon> cons;
  for (size_t i = 0; i < dirs_.size(); ++i) {
    auto [lo, hi] = dirs_[i].offsets.gap(a.k[i]);
    LinCon up;
    up.a = to_rat(dirs_[i].phi);
    up.rel = closed ? Rel::Le : Rel::Lt;
    up.b = hi;
    cons.push_back(up);
    LinCon dn;
    dn.a = -to_rat(dirs_[i].phi);
    dn.rel = closed ? Rel::Le : Rel::Lt;
    dn.b = -lo;
    cons.push_back(dn);
  }
  return cons;
}

bool Arrangement::is_alcove(const Alcove& a) const {
  return feasible(alcove_constraints(a, false), dim());
}

RatVec Arrangement::interior_point(const Alcove& a) const {
  auto x = solve_constraints(alcove_constraints(a, false), dim());
  if (!x) throw Error("interior_point: empty alcove");
  return *x;
}

std::vector<NeighborEntry> Arrangement::walls_and_neighbors(const Alcove& a) const {
  if (!is_alcove(a)) throw Error("walls_and_neighbors: not an alcove");
  std::vector<NeighborEntry> out;
  for (size_t i = 0; i < dirs_.size(); ++i) {
    auto [lo, hi] = dirs_[i].offsets.gap(a.k[i]);
    for (int side : {-1, +1}) {
      // Face in the wall: equality there, open elsewhere; nonempty relative
      // interior makes it a codimension-1 facet.
      Rat level = side > 0 ? hi : lo;
      std::vector<LinCon> cons;
      LinCon eq;
      eq.a = to_rat(dirs_[i].phi);
      eq.rel = Rel::Eq;
      eq.b = level;
      cons.push_back(eq);
      for (size_t j = 0; j < dirs_.size(); ++j) {
        if (j == i) continue;
        auto [l2, h2] = dirs_[j].offsets.gap(a.k[j]);
        LinCon up;
        up.a = to_rat(dirs_[j].phi);
        up.rel = Rel::Lt;
        up.b = h2;
        cons.push_back(up);
        LinCon dn;
        dn.a = -to_rat(dirs_[j].phi);
        dn.rel = Rel::Lt;
        dn.b = -l2;
        cons.push_back(dn);
      }
      if (!feasible(cons, dim())) continue;
      NeighborEntry e;
      e.wall = {(int)i, level};
      e.side = side;
      e.alcove = a;
      e.alcove.k[i] += side;
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Alcove> Arrangement::enumerate_window(const Rat& radius) const {
  // Candidate index ranges from the pairing range over the box.
  std::vector<std::pair<Int, Int>> ranges;
  for (const auto& d : dirs_) {
    Rat bound(0);
    for (Int c : d.phi) bound += Rat(c < 0 ? -c : c) * radius;
    Int lo = d.offsets.index_of(-bound);
    Int hi = d.offsets.index_of(bound);
    ranges.emplace_back(lo, hi);
  }
  std::vector<Alcove> out;
  Alcove a;
  a.k.assign(dirs_.size(), 0);
  auto box_meets = [&](const Alcove& al) {
    auto cons = alcove_constraints(al, true);
    for (int i = 0; i < dim(); ++i) {
      LinCon up;
      up.a.assign(dim(), Rat(0));
      up.a[i] = Rat(1);
      up.rel = Rel::Le;
      up.b = radius;
      cons.push_back(up);
      LinCon dn = up;
      dn.a[i] = Rat(-1);
      cons.push_back(dn);
    }
    return feasible(cons, dim());
  };
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == dirs_.size()) {
      if (is_alcove(a) && box_meets(a)) out.push_back(a);
      return;
    }
    for (Int k = ranges[i].first; k <= ranges[i].second; ++k) {
      a.k[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Int Arrangement::separation(const Alcove& a, const Alcove& b) const {
  Int s = 0;
  for (size_t i = 0; i < dirs_.size(); ++i)
    s += a.k[i] < b.k[i] ? b.k[i] - a.k[i] : a.k[i] - b.k[i];
  return s;
}

bool Arrangement::cone_order(const Alcove& a, const Alcove& b,
                             const ConeSpec& c) const {
  // Alcove closures are bounded polytopes (the direction functionals span),
  // so it suffices to check every vertex of cl(b) against cl(a) + C.
  auto verts = polytope_vertices(alcove_constraints(b, true), dim());
  int n = (int)c.generators.size();
  for (const auto& v : verts) {
    if (n == 0) {
      // C = {0}: v must lie in cl(a).
      bool ok = true;
      for (const auto& con : alcove_constraints(a, true))
        if (con.b < dot(con.a, v)) ok = false;
      if (!ok) return false;
      continue;
    }
    std::vector<LinCon> cons;
    for (size_t i = 0; i < dirs_.size(); ++i) {
      auto [lo, hi] = dirs_[i].offsets.gap(a.k[i]);
      Rat pv = dot(v, dirs_[i].phi);
      // lo <= phi(v) - sum_j t_j phi(g_j) <= hi
      LinCon up;  // -sum t_j phi(g_j) <= hi - phi(v)
      up.a.resize(n);
      for (int j = 0; j < n; ++j)
        up.a[j] = -Rat(dot(dirs_[i].phi, c.generators[j]));
      up.rel = Rel::Le;
      up.b = hi - pv;
      cons.push_back(up);
      LinCon dn;
      dn.a.resize(n);
      for (int j = 0; j < n; ++j)
        dn.a[j] = Rat(dot(dirs_[i].phi, c.generators[j]));
      dn.rel = Rel::Le;
      dn.b = pv - lo;
      cons.push_back(dn);
    }
    for (int j = 0; j < n; ++j) {
      LinCon ge;
      ge.a.assign(n, Rat(0));
      ge.a[j] = Rat(-1);
      ge.rel = Rel::Le;
      ge.b = Rat(0);
      cons.push_back(ge);
    }
    if (!feasible(cons, n)) return false;
  }
  return true;
}

IntVec Arrangement::positive_normal(const Alcove& a, const Alcove& b) const {
  int diff_dir = -1;
  for (size_t i = 0; i < dirs_.size(); ++i) {
    Int d = b.k[i] - a.k[i];
    if (d == 0) continue;
    if (diff_dir >= 0 || d > 1 || d < -1)
      throw NotAdjacent("alcoves differ in more than one wall");
    diff_dir = (int)i;
  }
  if (diff_dir < 0) throw NotAdjacent("alcoves coincide");
  // Adjacency also needs a shared codimension-1 face.
  bool found = false;
  for (const auto& e : walls_and_neighbors(a))
    if (e.alcove == b) found = true;
  if (!found) throw NotAdjacent("no shared codimension-1 wall");
  IntVec n = dirs_[diff_dir].phi;
  return b.k[diff_dir] > a.k[diff_dir] ? n : -n;
}

bool Arrangement::half_loop_in(const Alcove& a, const Alcove& b,
                               const ConeSpec& c) const {
  return c.contains(positive_normal(a, b));
}

ConeSpec Arrangement::parabolic_cone_in_v(const std::vector<int>& Jprime) const {
  std::set<int> in(Jprime.begin(), Jprime.end());
  std::vector<IntVec> rows;
  for (int i = 0; i < rd_->rank(); ++i) {
    if (in.count(i)) continue;
    rows.push_back(restrict_functional(rd_->simple_coroot(i)));
  }
  return cone_from_inequalities(dim(), rows);
}

void Arrangement::require_full(const char* op) const {
  if (!J_.empty())
    throw NotSupported(std::string(op) + " requires the full arrangement (J empty)");
}

Alcove Arrangement::fundamental_alcove() const {
  Alcove a;
  a.k.assign(dirs_.size(), 0);
  return a;
}

AffineMap Arrangement::wall_reflection(const Wall& w) const {
  require_full("wall_reflection");
  int n = rd_->rank();
  // Pick the source family (alpha, m) with integral level; for the full
  // arrangement each direction has exactly one source with scale 1.
  const auto& d = dirs_[w.dir];
  const Root& root = rd_->positive_roots()[d.sources[0].root_index];
  Rat level = (w.offset * d.sources[0].scale + Rat(root.coroot_height())) / Rat(p_);
  if (!level.is_integer()) throw Error("wall_reflection: non-integral level");
  Int np = level.num() * p_;
  // x - (<x + rho, alpha^vee> - n p) alpha : linear part I - alpha (alpha^vee)^T
  AffineMap g = AffineMap::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.m[i][j] -= root.weight_coords[i] * root.coroot[j];
  Int shift = np - root.coroot_height();
  for (int i = 0; i < n; ++i) g.t[i] = shift * root.weight_coords[i];
  return g;
}

Alcove Arrangement::image_alcove(const AffineMap& g, const Alcove& a) const {
  require_full("image_alcove");
  return locate(g.apply(interior_point(a)));
}

std::vector<Arrangement::WalkStep> Arrangement::walk(const Alcove& a,
                                                     const Alcove& b,
                                                     bool reverse_preference) const {
  require_full("walk");
  std::vector<WalkStep> steps;
  Alcove cur = a;
  AffineMap triv = trivialization(a);
  while (!(cur == b)) {
    bool moved = false;
    auto nbrs = walls_and_neighbors(cur);
    if (reverse_preference) std::reverse(nbrs.begin(), nbrs.end());
    for (const auto& e : nbrs) {
      Int db = b.k[e.wall.dir] - cur.k[e.wall.dir];
      if (db == 0 || (db > 0) != (e.side > 0)) continue;
      WalkStep s;
      s.wall = e.wall;
      s.to = e.alcove;
      // Type: pull the wall back through the trivialization of `cur`.
      s.type = wall_type_from_triv(triv, e.wall);
      steps.push_back(s);
      triv = wall_reflection(e.wall).after(triv);
      cur = e.alcove;
      moved = true;
      break;
    }
    if (!moved) throw Error("walk: stuck (no separating facet)");
  }
  return steps;
}

AffineMap Arrangement::trivialization(const Alcove& a) const {
  require_full("trivialization");
  // Walk from the fundamental alcove to `a`, composing actual wall
  // reflections: after crossing walls H1,...,Hm the element is
  // r_{Hm} o ... o r_{H1}.
  Alcove cur = fundamental_alcove();
  AffineMap g = AffineMap::identity(rd_->rank());
  while (!(cur == a)) {
    bool moved = false;
    for (const auto& e : walls_and_neighbors(cur)) {
      Int da = a.k[e.wall.dir] - cur.k[e.wall.dir];
      if (da == 0 || (da > 0) != (e.side > 0)) continue;
      g = wall_reflection(e.wall).after(g);
      cur = e.alcove;
      moved = true;
      break;
    }
    if (!moved) throw Error("trivialization: stuck");
  }
  return g;
}

int Arrangement::wall_type(const Alcove& a, const Wall& w) const {
  require_full("wall_type");
  return wall_type_from_triv(trivialization(a), w);
}

int Arrangement::wall_type_from_triv(const AffineMap& triv, const Wall& w) const {
  // H is a wall of g.A0 with g = triv; g^{-1}(H) is a wall of A0, and its
  // identity among the fundamental walls is the crossing type.
  int n = rd_->rank();
  const IntVec& phi = dirs_[w.dir].phi;
  IntVec psi(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) psi[j] += phi[i] * triv.m[i][j];
  Rat off = w.offset - Rat(dot(phi, triv.t));
  auto [prim, s] = primitive_direction(psi);
  off = off / s;
  for (const auto& fw : fundamental_walls_)
    if (dirs_[fw.wall.dir].phi == prim && fw.wall.offset == off) return fw.type;
  throw Error("wall_type: pulled-back wall is not a fundamental wall");
}

TransporterResult Arrangement::alcove_transporter(const Alcove& a,
                                                  const Alcove& b) const {
  require_full("alcove_transporter");
  TransporterResult r;
  AffineMap wa = trivialization(a);
  AffineMap wb = trivialization(b);
  r.map = wb.after(wa.inverse());
  r.weyl_matrix = r.map.m;
  // nu = t - (M rho - rho)
  IntVec rho = rd_->rho();
  IntVec mrho(rd_->rank(), 0);
  for (int i = 0; i < rd_->rank(); ++i)
    for (int j = 0; j < rd_->rank(); ++j) mrho[i] += r.map.m[i][j] * rho[j];
  r.translation = r.map.t - (mrho - rho);
  auto steps = walk(a, b);
  for (const auto& s : steps) {
    r.gallery_types.push_back(s.type);
    r.gallery_walls.push_back(s.wall);
  }
  r.separations = separation(a, b);
  return r;
}

}  // namespace alcove
