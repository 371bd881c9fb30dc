#include "alcove/json_io.hpp"

namespace alcove {

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<Int>());
  return Rat::parse(j.get<std::string>());
}

json ratvec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

RatVec ratvec_from_json(const json& j) {
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json intvec_to_json(const IntVec& v) { return json(v); }

IntVec intvec_from_json(const json& j) { return j.get<IntVec>(); }

json jset_to_json(const std::vector<int>& J) {
  json a = json::array();
  for (int i : J) a.push_back(i + 1);
  return a;
}

std::vector<int> jset_from_json(const json& j, int rank) {
  std::vector<int> J;
  for (const auto& x : j) {
    int i = x.get<int>();
    if (i < 1 || i > rank) throw Error("J index out of range: " + std::to_string(i));
    J.push_back(i - 1);
  }
  std::sort(J.begin(), J.end());
  return J;
}

json alcove_to_json(const Alcove& a) { return json{{"k", a.k}}; }

Alcove alcove_from_json(const json& j) {
  Alcove a;
  a.k = j.at("k").get<IntVec>();
  return a;
}

json word_to_json(const BraidWord& w) {
  json a = json::array();
  for (const auto& l : w.letters) {
    if (const auto* t = std::get_if<TLetter>(&l)) {
      std::string name = "s" + std::to_string(t->type);
      a.push_back(t->sign > 0 ? json{{"T", name}} : json{{"Tinv", name}});
    } else {
      a.push_back(json{{"theta", std::get<ThetaLetter>(l).x}});
    }
  }
  return a;
}

BraidWord word_from_json(const json& j) {
  BraidWord w;
  for (const auto& e : j) {
    if (e.contains("T") || e.contains("Tinv")) {
      bool inv = e.contains("Tinv");
      std::string name = e.at(inv ? "Tinv" : "T").get<std::string>();
      if (name.empty() || name[0] != 's') throw Error("bad T letter: " + name);
      w.letters.push_back(TLetter{std::stoi(name.substr(1)), inv ? -1 : +1});
    } else if (e.contains("theta")) {
      w.letters.push_back(ThetaLetter{e.at("theta").get<IntVec>()});
    } else {
      throw Error("unknown braid letter: " + e.dump());
    }
  }
  return w;
}

json group_algebra_to_json(const GroupAlgebraElem& f) {
  json terms = json::array();
  for (const auto& [w, c] : f.terms()) {
    json coeffs = json::object();
    for (const auto& [e, n] : c.coeffs()) coeffs[std::to_string(e)] = n;
    terms.push_back(json{{"weight", w}, {"coeffs", coeffs}});
  }
  return json{{"terms", terms}};
}

json label_to_json(const CategoryLabel& l) {
  switch (l.kind) {
    case CategoryLabel::Kind::Alcove:
      return json{{"alcove", alcove_to_json(l.alcove)}, {"display", l.str()}};
    case CategoryLabel::Kind::Point:
      return json{{"point", jset_to_json(l.P)}, {"display", l.str()}};
    case CategoryLabel::Kind::DMod:
      return json{{"dmod", jset_to_json(l.P)},
                  {"twist", ratvec_to_json(l.twist)},
                  {"display", l.str()}};
  }
  return json();
}

json functor_to_json(const FunctorExpr& e) {
  json atoms = json::array();
  for (const auto& a : e.chain) {
    json x;
    switch (a.kind) {
      case FunctorAtom::Kind::Loc:
        x = json{{"loc", jset_to_json(a.P)},
                 {"at", ratvec_to_json(a.param)},
                 {"alcove", a.alcove.k}};
        break;
      case FunctorAtom::Kind::Gamma:
        x = json{{"gamma", jset_to_json(a.P)},
                 {"at", ratvec_to_json(a.param)},
                 {"alcove", a.alcove.k}};
        break;
      case FunctorAtom::Kind::Twist:
        x = json{{"twist", ratvec_to_json(a.param)}};
        break;
      case FunctorAtom::Kind::DCoh:
        x = json{{"dcoh", jset_to_json(a.P)}, {"inverted", a.inverted}};
        break;
    }
    atoms.push_back(x);
  }
  return json{{"compose", atoms}, {"display", e.str()}};
}

json path_to_json(const Path& p) {
  json toks = json::array();
  for (const auto& t : p.tokens) {
    if (const auto* c = std::get_if<CrossToken>(&t)) {
      json body{{"wall", c->dir}, {"side", c->side}};
      toks.push_back(c->positive ? json{{"crossPos", body}} : json{{"crossNeg", body}});
    } else {
      const auto& pt = std::get<PointToken>(t);
      json body{{"P", jset_to_json(pt.P)}};
      if (!pt.to_point && pt.dir >= 0) {
        body["wall"] = pt.dir;
        body["side"] = pt.side;
      }
      toks.push_back(pt.to_point ? json{{"toPoint", body}} : json{{"fromPoint", body}});
    }
  }
  return json{{"base", alcove_to_json(p.base)}, {"tokens", toks}};
}

Path path_from_json(const json& j) {
  Path p;
  p.base = alcove_from_json(j.at("base"));
  for (const auto& t : j.at("tokens")) {
    if (t.contains("crossPos") || t.contains("crossNeg")) {
      bool pos = t.contains("crossPos");
      const json& body = t.at(pos ? "crossPos" : "crossNeg");
      CrossToken c;
      c.dir = body.at("wall").get<int>();
      c.side = body.value("side", +1);
      c.positive = pos;
      p.tokens.push_back(c);
    } else if (t.contains("toPoint") || t.contains("fromPoint")) {
      bool to = t.contains("toPoint");
      const json& body = t.at(to ? "toPoint" : "fromPoint");
      PointToken pt;
      for (const auto& x : body.at("P")) pt.P.push_back(x.get<int>() - 1);
      std::sort(pt.P.begin(), pt.P.end());
      pt.to_point = to;
      pt.dir = body.value("wall", -1);
      pt.side = body.value("side", +1);
      p.tokens.push_back(pt);
    } else {
      throw Error("unknown path token: " + t.dump());
    }
  }
  return p;
}

json cone_to_json(const ConeSpec& c) {
  json gens = json::array();
  for (const auto& g : c.generators) gens.push_back(ratvec_to_json(to_rat(g)));
  json duals = json::array();
  for (const auto& d : c.duals) duals.push_back(ratvec_to_json(to_rat(d)));
  return json{{"generators", gens}, {"duals", duals}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"id", c.id},
           {"kind", c.kind},
           {"verdict", c.verdict},
           {"pass", c.pass},
           {"certificate", c.certificate}};
    if (c.axiom_uses > 0) e["axiom_uses"] = c.axiom_uses;
    checks.push_back(e);
  }
  return json{{"checks", checks}, {"failures", r.failures}};
}

json verdict_to_json(const EqualityVerdict& v) {
  std::string name = v.outcome == Verdict::Equal
                         ? "Equal"
                         : (v.outcome == Verdict::Distinct ? "Distinct" : "Unknown");
  return json{{"verdict", name}, {"certificate", v.certificate}};
}

}  // namespace alcove
