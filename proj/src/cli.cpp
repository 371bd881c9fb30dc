#include "alcove/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "alcove/json_io.hpp"

namespace alcove::cli {
namespace {

struct Config {
  std::string type;
  std::string series;
  int rank = 0;
  std::string J;
  Int p = 0;
  std::string window = "10";
  unsigned long long seed = 0;
  int jobs = 1;
  size_t bound = 200000;
  Int radius = 2;  // shadow test-set radius
  std::string v_spec;
  std::string out_path;
};

void add_common(CLI::App* cmd, Config& cfg, bool needs_p) {
  cmd->add_option("--type", cfg.type, "series+rank, e.g. A2");
  cmd->add_option("--series", cfg.series, "series letter A..G");
  cmd->add_option("--rank", cfg.rank, "rank");
  cmd->add_option("--J", cfg.J, "parabolic subset, 1-based comma list");
  auto* p = cmd->add_option("--p", cfg.p, "level (must exceed the Coxeter number)");
  if (needs_p) p->required();
  cmd->add_option("--window", cfg.window, "window radius (rational)");
  cmd->add_option("--seed", cfg.seed, "seed for randomized sweeps");
  cmd->add_option("--jobs", cfg.jobs, "parallel verification jobs");
  cmd->add_option("--bound", cfg.bound, "search bound for the word oracle");
  cmd->add_option("--radius", cfg.radius, "test-set ball radius");
  cmd->add_option("--v-spec", cfg.v_spec,
                  "rational v specialization for fast non-certifying screening");
  cmd->add_option("--out", cfg.out_path, "write the full JSON report to a file");
}

RootDatum datum_of(const Config& cfg) {
  std::string t = cfg.type;
  if (t.empty() && !cfg.series.empty())
    t = cfg.series + std::to_string(cfg.rank);
  if (t.size() < 2) throw Error("missing --type (e.g. --type A2)");
  return RootDatum::build(t[0], std::stoi(t.substr(1)));
}

std::vector<int> jset_of(const Config& cfg, const RootDatum& rd) {
  std::vector<int> J;
  std::stringstream ss(cfg.J);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int i = std::stoi(item);
    if (i < 1 || i > rd.rank())
      throw Error("J index out of range: " + std::to_string(i));
    J.push_back(i - 1);
  }
  std::sort(J.begin(), J.end());
  return J;
}

RatVec parse_point(const std::string& s) {
  RatVec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rat::parse(item));
  return v;
}

IntVec parse_kvec(const std::string& s) {
  IntVec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
  return v;
}

// Specialize v to a nonzero rational: fast screening, not a certificate.
Rat laurent_eval(const Laurent& l, const Rat& v) {
  Rat s(0);
  for (const auto& [e, c] : l.coeffs()) {
    Rat p(1);
    for (Int k = 0; k < (e < 0 ? -e : e); ++k) p *= v;
    if (e < 0) p = Rat(1) / p;
    s += Rat(c) * p;
  }
  return s;
}

bool elem_zero(const GroupAlgebraElem& f, const std::optional<Rat>& vspec) {
  if (!vspec) return f.is_zero();
  for (const auto& [w, c] : f.terms())
    if (!laurent_eval(c, *vspec).is_zero()) return false;
  return true;
}

// Relation suites (quadratic, braid) emitted as check records.
std::vector<CheckRecord> hecke_checks(const RootDatum& rd, const BraidContext& bc,
                                      Int radius, const std::optional<Rat>& vspec) {
  std::vector<CheckRecord> recs;
  const Shadow& sh = bc.shadow();
  auto ball = sh.ball(radius);
  std::string mode = vspec ? " [specialized at v=" + vspec->str() +
                                 "; screening only, not certifying]"
                           : "";
  for (int t = 0; t <= rd.rank(); ++t) {
    CheckRecord rec;
    rec.kind = "hecke-quadratic";
    rec.id = "hecke-quadratic:s" + std::to_string(t);
    rec.pass = true;
    for (const auto& w : ball) {
      GroupAlgebraElem e = GroupAlgebraElem::basis(w);
      GroupAlgebraElem te = sh.apply_T(t, e);
      GroupAlgebraElem lhs =
          sh.apply_T(t, te) - te.scaled(v_plus() - v_minus()) - e;
      if (!elem_zero(lhs, vspec)) {
        rec.pass = false;
        rec.certificate = "fails at e" + vec_str(w) + ": " + lhs.str();
        break;
      }
    }
    rec.verdict = rec.pass ? "Equal" : "Distinct";
    if (rec.pass)
      rec.certificate = "(T-v)(T+v^-1) = 0 on " + std::to_string(ball.size()) +
                        " basis elements" + mode;
    recs.push_back(rec);
  }
  for (int a = 0; a <= rd.rank(); ++a) {
    for (int b = a + 1; b <= rd.rank(); ++b) {
      int m = bc.braid_order(a, b);
      if (m < 2) continue;  // infinite: no relation
      CheckRecord rec;
      rec.kind = "hecke-braid";
      rec.id = "hecke-braid:s" + std::to_string(a) + ",s" + std::to_string(b);
      rec.pass = true;
      std::vector<int> w1, w2;
      for (int k = 0; k < m; ++k) {
        w1.push_back(k % 2 == 0 ? a : b);
        w2.push_back(k % 2 == 0 ? b : a);
      }
      auto wa = t_word(w1);
      auto wb = t_word(w2);
      for (const auto& w : ball) {
        GroupAlgebraElem e = GroupAlgebraElem::basis(w);
        if (!elem_zero(sh.apply_word(wa, e) - sh.apply_word(wb, e), vspec)) {
          rec.pass = false;
          rec.certificate = "fails at e" + vec_str(w);
          break;
        }
      }
      if (rec.pass)
        rec.certificate =
            "m=" + std::to_string(m) + " alternating products agree" + mode;
      rec.verdict = rec.pass ? "Equal" : "Distinct";
      recs.push_back(rec);
    }
  }
  return recs;
}

std::vector<CheckRecord> bernstein_checks(const RootDatum& rd,
                                          const BraidContext& bc, Int radius) {
  std::vector<CheckRecord> recs;
  Shadow sh(rd);
  for (int t = 1; t <= rd.rank(); ++t) {
    for (const auto& x : sh.ball(radius)) {
      Int pairing = x[t - 1];
      if (pairing != 0 && pairing != 1) continue;
      if (is_zero(x)) continue;
      CheckRecord rec;
      rec.kind = "bernstein";
      rec.id = "bernstein:s" + std::to_string(t) + ":x" + vec_str(x);
      auto v = bc.bernstein_check(t, x, radius);
      rec.pass = v.outcome == Verdict::Equal;
      rec.verdict = rec.pass ? "Equal" : "Distinct";
      rec.certificate = v.certificate;
      recs.push_back(rec);
    }
  }
  return recs;
}

int emit_report(const Report& rep, const Config& cfg, std::ostream& out) {
  json j = report_to_json(rep);
  for (const auto& c : j["checks"]) out << c.dump() << "\n";
  out << json{{"summary",
               {{"checks", rep.checks.size()}, {"failures", rep.failures}}}}
             .dump()
      << "\n";
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    f << j.dump(2) << "\n";
  }
  return rep.failures.empty() ? 0 : 1;
}

void append(Report& rep, std::vector<CheckRecord> recs) {
  for (auto& r : recs) {
    if (!r.pass) rep.failures.push_back(r.id);
    rep.checks.push_back(std::move(r));
  }
}

void sort_report(Report& rep) {
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  std::sort(rep.failures.begin(), rep.failures.end());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for level-p alcove geometry, braid words, and "
               "the local system of categories"};
  app.require_subcommand(0, 1);
  Config cfg;

  // rootdata show
  auto* rootdata = app.add_subcommand("rootdata", "root datum queries");
  auto* rd_show = rootdata->add_subcommand("show", "print the root datum");
  add_common(rd_show, cfg, false);

  // alcoves locate|neighbors|enumerate
  auto* alcoves = app.add_subcommand("alcoves", "alcove geometry queries");
  auto* al_locate = alcoves->add_subcommand("locate", "alcove of a rational point");
  std::string point_arg;
  al_locate->add_option("--point", point_arg, "rational coordinates, e.g. 2/1,3/1")
      ->required();
  add_common(al_locate, cfg, true);
  auto* al_neighbors = alcoves->add_subcommand("neighbors", "walls and neighbors");
  std::string k_arg;
  al_neighbors->add_option("--k", k_arg, "alcove index vector")->required();
  add_common(al_neighbors, cfg, true);
  auto* al_enum = alcoves->add_subcommand("enumerate", "alcoves meeting the window");
  add_common(al_enum, cfg, true);

  // order test
  auto* order = app.add_subcommand("order", "cone partial order");
  auto* order_test = order->add_subcommand("test", "decide A <=_C B");
  std::string a_arg, b_arg, cone_arg = "dominant";
  order_test->add_option("--A", a_arg, "first alcove index vector")->required();
  order_test->add_option("--B", b_arg, "second alcove index vector")->required();
  order_test->add_option("--cone", cone_arg, "dominant or P:<1-based J list>");
  add_common(order_test, cfg, true);

  // path compile|functor|monodromy
  auto* path = app.add_subcommand("path", "path compilation");
  std::string path_arg;
  auto* path_compile = path->add_subcommand("compile", "braid word of a path");
  path_compile->add_option("--path", path_arg, "path JSON")->required();
  add_common(path_compile, cfg, true);
  auto* path_functor = path->add_subcommand("functor", "functor expression of a path");
  path_functor->add_option("--path", path_arg, "path JSON")->required();
  add_common(path_functor, cfg, true);
  auto* path_mono = path->add_subcommand("monodromy", "word and purity of a loop");
  path_mono->add_option("--path", path_arg, "path JSON")->required();
  add_common(path_mono, cfg, true);

  // verify ...
  auto* verify = app.add_subcommand("verify", "relation verification suites");
  auto* v_salvetti = verify->add_subcommand("salvetti", "codimension-2 relations");
  add_common(v_salvetti, cfg, true);
  auto* v_hecke = verify->add_subcommand("hecke", "quadratic and braid relations");
  add_common(v_hecke, cfg, true);
  auto* v_bern = verify->add_subcommand("bernstein", "lattice mixed relations");
  add_common(v_bern, cfg, true);
  auto* v_local = verify->add_subcommand("localsystem", "full local-system checks");
  add_common(v_local, cfg, true);
  auto* v_all = verify->add_subcommand("all", "every suite");
  add_common(v_all, cfg, true);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (!cfg.v_spec.empty() && Rat::parse(cfg.v_spec).is_zero())
      throw Error("--v-spec must be nonzero");

    if (rd_show->parsed()) {
      RootDatum rd = datum_of(cfg);
      auto J = jset_of(cfg, rd);
      auto W = weyl_group(rd);
      json roots = json::array();
      for (const auto& r : rd.positive_roots())
        roots.push_back(json{{"simple", r.simple_coords},
                             {"weight", r.weight_coords},
                             {"coroot", r.coroot}});
      json basis = json::array();
      for (const auto& b : levi_lattice(rd, J)) basis.push_back(b);
      json cone = json::array();
      for (const auto& g : cone_of_parabolic(rd, J)) cone.push_back(g);
      json assoc = json::array();
      for (const auto& q : associated_subsets(rd, J)) assoc.push_back(jset_to_json(q));
      int longest = 0;
      for (const auto& w : W) longest = std::max(longest, w.length);
      out << json{{"series", std::string(1, rd.series())},
                  {"rank", rd.rank()},
                  {"coxeter_number", rd.coxeter_number()},
                  {"positive_roots", roots},
                  {"weyl_order", W.size()},
                  {"longest_length", longest},
                  {"J", jset_to_json(J)},
                  {"levi_basis", basis},
                  {"cone", cone},
                  {"associated", assoc}}
                 .dump()
          << "\n";
      return 0;
    }

    if (al_locate->parsed() || al_neighbors->parsed() || al_enum->parsed()) {
      RootDatum rd = datum_of(cfg);
      Arrangement arr(rd, jset_of(cfg, rd), cfg.p);
      if (al_locate->parsed()) {
        try {
          Alcove a = arr.locate(parse_point(point_arg));
          out << alcove_to_json(a).dump() << "\n";
        } catch (const OnWall& w) {
          out << json{{"error", "OnWall"}, {"walls", w.walls}}.dump() << "\n";
          return 2;
        }
        return 0;
      }
      if (al_neighbors->parsed()) {
        Alcove a;
        a.k = parse_kvec(k_arg);
        json entries = json::array();
        for (const auto& e : arr.walls_and_neighbors(a))
          entries.push_back(json{{"wall",
                                  {{"dir", e.wall.dir},
                                   {"offset", rat_to_json(e.wall.offset)},
                                   {"side", e.side}}},
                                 {"alcove", alcove_to_json(e.alcove)}});
        out << json{{"alcove", alcove_to_json(a)}, {"neighbors", entries}}.dump()
            << "\n";
        return 0;
      }
      json list = json::array();
      for (const auto& a : arr.enumerate_window(Rat::parse(cfg.window)))
        list.push_back(alcove_to_json(a));
      out << json{{"window", cfg.window}, {"alcoves", list}}.dump() << "\n";
      return 0;
    }

    if (order_test->parsed()) {
      RootDatum rd = datum_of(cfg);
      Arrangement arr(rd, jset_of(cfg, rd), cfg.p);
      Alcove a, b;
      a.k = parse_kvec(a_arg);
      b.k = parse_kvec(b_arg);
      ConeSpec cone;
      if (cone_arg == "dominant") {
        cone = arr.parabolic_cone_in_v(arr.J());
      } else if (cone_arg.rfind("P:", 0) == 0) {
        std::vector<int> Jp;
        std::stringstream ss(cone_arg.substr(2));
        std::string item;
        while (std::getline(ss, item, ',')) Jp.push_back(std::stoi(item) - 1);
        cone = arr.parabolic_cone_in_v(Jp);
      } else {
        throw Error("unknown cone spec: " + cone_arg);
      }
      bool le = arr.cone_order(a, b, cone);
      out << json{{"A", alcove_to_json(a)},
                  {"B", alcove_to_json(b)},
                  {"cone", cone_to_json(cone)},
                  {"above", le}}
                 .dump()
          << "\n";
      return 0;
    }

    if (path_compile->parsed() || path_functor->parsed() || path_mono->parsed()) {
      RootDatum rd = datum_of(cfg);
      LocalSystem ls(rd, jset_of(cfg, rd), cfg.p);
      Path p = path_from_json(json::parse(path_arg));
      if (path_compile->parsed()) {
        BraidWord w = ls.braid_word_of_path(p);
        out << json{{"word", word_to_json(w)},
                    {"reduced", word_to_json(free_reduce(w))}}
                   .dump()
            << "\n";
        return 0;
      }
      if (path_functor->parsed()) {
        FunctorExpr e = ls.functor_of_path(p);
        out << json{{"functor", functor_to_json(e)},
                    {"simplified", functor_to_json(simplify_functor(e))}}
                   .dump()
            << "\n";
        return 0;
      }
      auto mono = ls.monodromy(p);
      out << json{{"word", word_to_json(mono.word)}, {"pure", mono.pure}}.dump()
          << "\n";
      return 0;
    }

    if (v_salvetti->parsed() || v_hecke->parsed() || v_bern->parsed() ||
        v_local->parsed() || v_all->parsed()) {
      RootDatum rd = datum_of(cfg);
      auto J = jset_of(cfg, rd);
      Report rep;
      VerifyOptions vopts;
      vopts.window_radius = Rat::parse(cfg.window);
      vopts.seed = cfg.seed;
      vopts.jobs = cfg.jobs;
      vopts.word_opts.search_bound = cfg.bound;
      vopts.word_opts.shadow_radius = cfg.radius;
      if (v_salvetti->parsed() || v_local->parsed() || v_all->parsed()) {
        LocalSystem ls(rd, J, cfg.p);
        vopts.parts = v_salvetti->parsed() ? VerifyOptions::kSalvetti
                                           : VerifyOptions::kAll;
        Report sub = ls.verify(vopts);
        append(rep, std::move(sub.checks));
      }
      if (v_hecke->parsed() || v_all->parsed()) {
        BraidContext bc(rd, cfg.p);
        std::optional<Rat> vspec;
        if (!cfg.v_spec.empty()) vspec = Rat::parse(cfg.v_spec);
        append(rep, hecke_checks(rd, bc, cfg.radius, vspec));
      }
      if (v_bern->parsed() || v_all->parsed()) {
        BraidContext bc(rd, cfg.p);
        append(rep, bernstein_checks(rd, bc, cfg.radius));
      }
      sort_report(rep);
      return emit_report(rep, cfg, out);
    }

    out << app.help();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace alcove::cli
