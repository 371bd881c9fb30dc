#include "alcove/heckeshadow.hpp"

#include <algorithm>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, c] : b.c_) {
    Int& v = r.c_[e];
    v += c;
    if (v == 0) r.c_.erase(e);
  }
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [e1, c1] : a.c_)
    for (const auto& [e2, c2] : b.c_) {
      Int& v = r.c_[e1 + e2];
      v += c1 * c2;
      if (v == 0) r.c_.erase(e1 + e2);
    }
  return r;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << (c >= 0 ? "+" : "");
    os << c;
    if (e != 0) os << "v^" << e;
    first = false;
  }
  return os.str();
}

void GroupAlgebraElem::add_term(const IntVec& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_[w] = c;
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

GroupAlgebraElem operator+(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  GroupAlgebraElem r = a;
  for (const auto& [w, c] : b.t_) r.add_term(w, c);
  return r;
}

GroupAlgebraElem operator-(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  GroupAlgebraElem r = a;
  for (const auto& [w, c] : b.t_) r.add_term(w, -c);
  return r;
}

GroupAlgebraElem GroupAlgebraElem::scaled(const Laurent& c) const {
  GroupAlgebraElem r;
  for (const auto& [w, x] : t_) r.add_term(w, x * c);
  return r;
}

std::string GroupAlgebraElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")e" << vec_str(w);
    first = false;
  }
  return os.str();
}

GroupAlgebraElem divide_one_minus_exp(const GroupAlgebraElem& g, const IntVec& alpha,
                                      const IntVec& alpha_coroot) {
  // Split the support into lines mu + Z*alpha; on each line the equation
  // (1 - e^{-alpha}) q = g reads q_k - q_{k+1} = g_k, so q_k is the upper
  // tail sum of the g coefficients; divisibility means each line sums to 0.
  struct Line {
    std::map<Int, Laurent> coeff;  // position along the line -> coefficient
  };
  std::map<IntVec, Line> lines;
  for (const auto& [w, c] : g.terms()) {
    Int pr = dot(w, alpha_coroot);
    Int k = pr >= 0 ? pr / 2 : -((-pr + 1) / 2);  // floor(pr / 2)
    IntVec rep = w - k * alpha;
    lines[rep].coeff[k] = c;
  }
  GroupAlgebraElem q;
  for (const auto& [rep, line] : lines) {
    Laurent tail;
    for (auto it = line.coeff.rbegin(); it != line.coeff.rend(); ++it) {
      tail = tail + it->second;
      if (!tail.is_zero()) q.add_term(rep + it->first * alpha, tail);
    }
    if (!tail.is_zero())
      throw InexactDivision("division by 1 - e^{-alpha} leaves remainder");
  }
  return q;
}

Shadow::Shadow(const RootDatum& rd) : rd_(&rd), star_(rd.highest_coroot_index()) {}

GroupAlgebraElem Shadow::apply_theta(const IntVec& x,
                                     const GroupAlgebraElem& f) const {
  GroupAlgebraElem r;
  for (const auto& [w, c] : f.terms()) r.add_term(w + x, c);
  return r;
}

IntVec Shadow::reflect_exponent(int type, const IntVec& w) const {
  if (type >= 1) {
    int i = type - 1;
    return w - w[i] * rd_->simple_root(i);
  }
  // Level-one reflection in the highest-coroot wall: s(x) + alpha_star.
  const Root& star = rd_->positive_roots()[star_];
  return w - dot(w, star.coroot) * star.weight_coords + star.weight_coords;
}

IntVec Shadow::letter_root(int type) const {
  if (type >= 1) return rd_->simple_root(type - 1);
  return rd_->positive_roots()[star_].weight_coords;
}

GroupAlgebraElem Shadow::apply_T(int type, const GroupAlgebraElem& f) const {
  GroupAlgebraElem sf;
  for (const auto& [w, c] : f.terms()) sf.add_term(reflect_exponent(type, w), c);
  IntVec alpha = letter_root(type);
  IntVec alpha_coroot =
      type >= 1 ? rd_->simple_coroot(type - 1) : rd_->positive_roots()[star_].coroot;
  GroupAlgebraElem diff = divide_one_minus_exp(f - sf, alpha, alpha_coroot);
  return sf.scaled(v_plus()) + diff.scaled(v_plus() - v_minus());
}

GroupAlgebraElem Shadow::apply_T_inverse(int type, const GroupAlgebraElem& f) const {
  // T^{-1} = T - (v - v^{-1}), from (T - v)(T + v^{-1}) = 0.
  return apply_T(type, f) - f.scaled(v_plus() - v_minus());
}

GroupAlgebraElem Shadow::apply_word(const BraidWord& word,
                                    const GroupAlgebraElem& f) const {
  GroupAlgebraElem r = f;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (const auto* t = std::get_if<TLetter>(&*it))
      r = t->sign > 0 ? apply_T(t->type, r) : apply_T_inverse(t->type, r);
    else
      r = apply_theta(std::get<ThetaLetter>(*it).x, r);
  }
  return r;
}

bool Shadow::operators_agree(const BraidWord& a, const BraidWord& b,
                             const std::vector<IntVec>& testset) const {
  return !separating_weight(a, b, testset).has_value();
}

std::optional<IntVec> Shadow::separating_weight(
    const BraidWord& a, const BraidWord& b,
    const std::vector<IntVec>& testset) const {
  for (const auto& w : testset) {
    GroupAlgebraElem e = GroupAlgebraElem::basis(w);
    if (!(apply_word(a, e) == apply_word(b, e))) return w;
  }
  return std::nullopt;
}

std::vector<IntVec> Shadow::ball(Int radius) const {
  std::vector<IntVec> out;
  IntVec w(rd_->rank(), -radius);
  while (true) {
    out.push_back(w);
    int i = 0;
    while (i < rd_->rank() && w[i] == radius) w[i++] = -radius;
    if (i == rd_->rank()) break;
    ++w[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alcove
