#include "alcove/words.hpp"

#include <sstream>

namespace alcove {

bool BraidWord::positive() const {
  for (const auto& l : letters) {
    const auto* t = std::get_if<TLetter>(&l);
    if (!t || t->sign < 0) return false;
  }
  return true;
}

std::string BraidWord::str() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (const auto& l : letters) {
    if (const auto* t = std::get_if<TLetter>(&l)) {
      os << "T" << t->type << (t->sign < 0 ? "'" : "");
    } else {
      os << "th" << vec_str(std::get<ThetaLetter>(l).x);
    }
  }
  return os.str();
}

BraidWord multiply(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (const auto* t = std::get_if<TLetter>(&*it))
      r.letters.push_back(TLetter{t->type, -t->sign});
    else
      r.letters.push_back(ThetaLetter{-std::get<ThetaLetter>(*it).x});
  }
  return r;
}

BraidWord free_reduce(BraidWord w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters) {
    if (const auto* th = std::get_if<ThetaLetter>(&l)) {
      if (!out.empty() && std::holds_alternative<ThetaLetter>(out.back())) {
        IntVec sum = std::get<ThetaLetter>(out.back()).x + th->x;
        out.pop_back();
        if (!is_zero(sum)) out.push_back(ThetaLetter{sum});
      } else if (!is_zero(th->x)) {
        out.push_back(l);
      }
      continue;
    }
    const auto& t = std::get<TLetter>(l);
    if (!out.empty()) {
      if (const auto* prev = std::get_if<TLetter>(&out.back());
          prev && prev->type == t.type && prev->sign == -t.sign) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(l);
  }
  BraidWord r;
  r.letters = std::move(out);
  return r;
}

}  // namespace alcove
