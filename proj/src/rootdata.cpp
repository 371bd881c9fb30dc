#include "alcove/rootdata.hpp"

#include <algorithm>
#include <deque>

namespace alcove {
namespace {

std::vector<IntVec> cartan_matrix(char series, int rank) {
  auto chain = [&](int n) {
    std::vector<IntVec> c(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) {
      c[i][i] = 2;
      if (i + 1 < n) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
    }
    return c;
  };
  switch (series) {
    case 'A': {
      if (rank < 1) throw UnsupportedType("A requires rank >= 1");
      return chain(rank);
    }
    case 'B': {
      // alpha_rank is the short root: <alpha_{n-1}, alpha_n^vee> = -2.
      if (rank < 2) throw UnsupportedType("B requires rank >= 2");
      auto c = chain(rank);
      c[rank - 1][rank - 2] = -2;
      return c;
    }
    case 'C': {
      if (rank < 2) throw UnsupportedType("C requires rank >= 2");
      auto c = chain(rank);
      c[rank - 2][rank - 1] = -2;
      return c;
    }
    case 'D': {
      if (rank < 3) throw UnsupportedType("D requires rank >= 3");
      auto c = chain(rank - 1);
      for (auto& row : c) row.resize(rank, 0);
      c.emplace_back(rank, 0);
      c[rank - 1][rank - 1] = 2;
      c[rank - 1][rank - 3] = -1;
      c[rank - 3][rank - 1] = -1;
      c[rank - 1][rank - 2] = 0;
      c[rank - 2][rank - 1] = 0;
      return c;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw UnsupportedType("E requires rank 6..8");
      // Bourbaki numbering: node 2 hangs off node 4 of the A-chain 1-3-4-5-6...
      auto c = std::vector<IntVec>(rank, IntVec(rank, 0));
      for (int i = 0; i < rank; ++i) c[i][i] = 2;
      auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(1, 3);
      for (int i = 4; i + 1 < rank; ++i) bond(i, i + 1);
      return c;
    }
    case 'F': {
      if (rank != 4) throw UnsupportedType("F requires rank 4");
      return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    }
    case 'G': {
      if (rank != 2) throw UnsupportedType("G requires rank 2");
      return {{2, -3}, {-1, 2}};
    }
    default:
      throw UnsupportedType(std::string("unknown series '") + series + "'");
  }
}

}  // namespace

RootDatum RootDatum::build(char series, int rank) {
  RootDatum rd;
  rd.series_ = series;
  rd.rank_ = rank;
  rd.cartan_ = cartan_matrix(series, rank);

  // Reflection closure of the simple roots, carrying coroots alongside.
  std::map<IntVec, Root> seen;  // keyed by simple_coords
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root r;
    r.simple_coords = IntVec(rank, 0);
    r.simple_coords[i] = 1;
    r.weight_coords = rd.simple_root(i);
    r.coroot = IntVec(rank, 0);
    r.coroot[i] = 1;
    seen[r.simple_coords] = r;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Root img;
      Int pr = dot(r.weight_coords, rd.simple_coroot(i));
      img.simple_coords = r.simple_coords;
      img.simple_coords[i] -= pr;  // s_i in simple-root coordinates
      img.weight_coords = rd.reflect_weight(i, r.weight_coords);
      img.coroot = rd.reflect_coroot(i, r.coroot);
      if (seen.emplace(img.simple_coords, img).second) queue.push_back(img);
    }
  }
  for (auto& [coords, root] : seen) {
    bool pos = true;
    for (Int c : coords) pos = pos && c >= 0;
    if (pos) rd.positive_.push_back(root);
  }
  std::sort(rd.positive_.begin(), rd.positive_.end(),
            [](const Root& a, const Root& b) {
              return a.simple_coords < b.simple_coords;
            });

  Int max_ht = 0;
  for (const auto& r : rd.positive_) max_ht = std::max(max_ht, r.height());
  rd.coxeter_ = max_ht + 1;
  return rd;
}

IntVec RootDatum::simple_root(int i) const {
  IntVec v(rank_);
  for (int k = 0; k < rank_; ++k) v[k] = cartan_[k][i];
  return v;
}

IntVec RootDatum::simple_coroot(int i) const {
  IntVec v(rank_, 0);
  v[i] = 1;
  return v;
}

IntVec RootDatum::reflect_weight(int i, const IntVec& w) const {
  IntVec r = w;
  Int p = w[i];  // <w, alpha_i^vee>
  IntVec a = simple_root(i);
  for (int k = 0; k < rank_; ++k) r[k] -= p * a[k];
  return r;
}

RatVec RootDatum::reflect_weight(int i, const RatVec& w) const {
  RatVec r = w;
  Rat p = w[i];
  IntVec a = simple_root(i);
  for (int k = 0; k < rank_; ++k) r[k] -= p * Rat(a[k]);
  return r;
}

IntVec RootDatum::reflect_coroot(int i, const IntVec& c) const {
  // s_i(c) = c - <alpha_i, c> alpha_i^vee
  Int p = dot(simple_root(i), c);
  IntVec r = c;
  r[i] -= p;
  return r;
}

int RootDatum::highest_coroot_index() const {
  int best = 0;
  for (size_t k = 1; k < positive_.size(); ++k)
    if (positive_[k].coroot_height() > positive_[best].coroot_height()) best = (int)k;
  return best;
}

std::vector<IntVec> weyl_matrix_product(const RootDatum& rd,
                                        const std::vector<int>& word) {
  int n = rd.rank();
  std::vector<IntVec> m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;  // columns = images of omega_i
  // Apply letters right-to-left: each column is word(omega_i).
  for (int c = 0; c < n; ++c) {
    IntVec v(n, 0);
    v[c] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      v = rd.reflect_weight(*it, v);
    for (int r = 0; r < n; ++r) m[r][c] = v[r];
  }
  return m;
}

std::vector<WeylElement> weyl_group(const RootDatum& rd, size_t bound) {
  int n = rd.rank();
  std::vector<IntVec> id(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;

  auto apply = [&](const std::vector<IntVec>& m, int i) {
    // s_i * m: reflect every column.
    std::vector<IntVec> r = m;
    for (int c = 0; c < n; ++c) {
      IntVec col(n);
      for (int k = 0; k < n; ++k) col[k] = m[k][c];
      col = rd.reflect_weight(i, col);
      for (int k = 0; k < n; ++k) r[k][c] = col[k];
    }
    return r;
  };

  std::map<std::vector<IntVec>, WeylElement> elems;
  WeylElement e;
  e.matrix = id;
  e.is_identity = true;
  elems[id] = e;
  std::vector<std::vector<IntVec>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<IntVec>> next;
    for (const auto& m : frontier) {
      const WeylElement cur = elems.at(m);
      for (int i = 0; i < n; ++i) {
        auto img = apply(m, i);  // s_i * w; prepending keeps BFS by length
        if (elems.count(img)) continue;
        WeylElement w;
        w.word = cur.word;
        w.word.insert(w.word.begin(), i);
        w.matrix = img;
        w.length = cur.length + 1;
        elems[img] = w;
        next.push_back(img);
        if (elems.size() > bound)
          throw GroupTooLarge("Weyl group exceeds bound " + std::to_string(bound));
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  out.reserve(elems.size());
  for (auto& [m, w] : elems) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.matrix < b.matrix;
  });
  int maxlen = out.back().length;
  for (auto& w : out) w.is_longest = (w.length == maxlen);
  return out;
}

std::vector<IntVec> levi_lattice(const RootDatum& rd, const std::vector<int>& J) {
  std::set<int> in(J.begin(), J.end());
  for (int j : J)
    if (j < 0 || j >= rd.rank()) throw Error("levi_lattice: index out of range");
  std::vector<IntVec> basis;
  for (int i = 0; i < rd.rank(); ++i) {
    if (in.count(i)) continue;
    IntVec v(rd.rank(), 0);
    v[i] = 1;
    basis.push_back(v);
  }
  return basis;
}

std::vector<std::vector<int>> associated_subsets(const RootDatum& rd,
                                                 const std::vector<int>& J,
                                                 size_t bound) {
  std::set<int> in(J.begin(), J.end());
  // Root subsystem of J: positive roots supported on J, with both signs.
  std::set<IntVec> sub;  // weight coordinates
  for (const auto& r : rd.positive_roots()) {
    bool ok = true;
    for (int i = 0; i < rd.rank(); ++i)
      if (r.simple_coords[i] != 0 && !in.count(i)) ok = false;
    if (ok) {
      sub.insert(r.weight_coords);
      sub.insert(-r.weight_coords);
    }
  }
  std::map<IntVec, int> simple_of;  // weight coords of alpha_i -> i
  for (int i = 0; i < rd.rank(); ++i) simple_of[rd.simple_root(i)] = i;

  auto subsystem_of = [&](const std::set<int>& K) {
    std::set<IntVec> s;
    for (const auto& r : rd.positive_roots()) {
      bool ok = true;
      for (int i = 0; i < rd.rank(); ++i)
        if (r.simple_coords[i] != 0 && !K.count(i)) ok = false;
      if (ok) {
        s.insert(r.weight_coords);
        s.insert(-r.weight_coords);
      }
    }
    return s;
  };

  std::set<std::vector<int>> found;
  for (const auto& w : weyl_group(rd, bound)) {
    std::set<IntVec> img;
    for (const auto& v : sub) {
      IntVec x(rd.rank(), 0);
      for (int r = 0; r < rd.rank(); ++r)
        for (int c = 0; c < rd.rank(); ++c) x[r] += w.matrix[r][c] * v[c];
      img.insert(x);
    }
    std::set<int> K;
    for (const auto& v : img) {
      auto it = simple_of.find(v);
      if (it != simple_of.end()) K.insert(it->second);
    }
    if (K.size() == in.size() && subsystem_of(K) == img)
      found.insert(std::vector<int>(K.begin(), K.end()));
  }
  return {found.begin(), found.end()};
}

std::vector<IntVec> cone_of_parabolic(const RootDatum& rd, const std::vector<int>& J) {
  // In Lambda_L coordinates the constraints <v, alpha_i^vee> >= 0 (i not in J)
  // read t_i >= 0, so the cone is generated by the omega_i, i not in J.
  return levi_lattice(rd, J);
}

ParabolicType parabolic_type(const RootDatum& rd, const std::vector<int>& J) {
  ParabolicType p;
  p.J = J;
  std::sort(p.J.begin(), p.J.end());
  p.levi_basis = levi_lattice(rd, J);
  p.cone_generators = cone_of_parabolic(rd, J);
  return p;
}

}  // namespace alcove
