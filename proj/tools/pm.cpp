/* Copyright 2026 The pmkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// pm: command-line front end for pmkit.
//
// Exit status: 0 on success or a positive verdict, 1 on a refuted,
// violated or inconclusive verdict, 2 on malformed input or usage errors.
// With --json, stdout carries exactly one JSON document and human-readable
// text goes to stderr.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "pmkit/pmkit.hpp"

using namespace pmkit;

namespace {

struct Report {
  Json doc;
  std::string text;
  int code = 0;
  bool data = false;  // the document is the product, printed in text mode too
};

// Spaces and maps -------------------------------------------------------------

struct LoadedSpace {
  std::string name;
  std::variant<FinitePMSpace, const CatalogSpace*> space;

  FinitePMSpace table() const {
    if (auto* f = std::get_if<FinitePMSpace>(&space)) return *f;
    return std::get<const CatalogSpace*>(space)->materialize();
  }
  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(
        [&](const auto& s) -> decltype(auto) {
          if constexpr (std::is_pointer_v<std::decay_t<decltype(s)>>)
            return f(*s);
          else
            return f(s);
        },
        space);
  }
};

LoadedSpace load_space(const std::string& arg) {
  const auto& c = standard_catalog();
  if (c.has_space(arg)) return {arg, &c.space(arg)};
  if (!std::filesystem::exists(arg))
    throw LookupError("'" + arg + "' is neither a catalog space nor a file");
  return {arg, finite_space_from_json(read_json_file(arg), arg)};
}

MapSpec load_map(const std::string& arg) {
  if (std::filesystem::exists(arg)) return map_from_json(read_json_file(arg), arg);
  return standard_catalog().map(arg);
}

SequenceSpec load_sequence(const std::string& arg, std::size_t horizon) {
  if (std::filesystem::exists(arg))
    return sequence_from_json(read_json_file(arg), standard_catalog(), horizon, arg);
  return standard_catalog().sequence(arg, horizon);
}

std::uint64_t resolve_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("PM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ArgumentError(std::string("PM_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return flag;
}

std::string join_points(const std::vector<Point>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + to_string(pts[i]);
  return out + "}";
}

// Commands ---------------------------------------------------------------------

Report cmd_axioms(const std::string& space) {
  const auto ls = load_space(space);
  const auto fs = ls.table();
  const auto rep = check_axioms(fs);
  Report r{to_json(rep), "", rep.pass ? 0 : 1};
  r.doc["space"] = ls.name;
  r.doc["points"] = fs.size();
  std::ostringstream os;
  if (rep.pass) {
    os << ls.name << ": P1-P4 hold on " << fs.size() << " points\n";
  } else {
    os << ls.name << ": " << axiom_name(*rep.violated) << " fails at (";
    for (std::size_t i = 0; i < rep.witness.size(); ++i) os << (i ? ", " : "") << rep.witness[i];
    os << "); values";
    for (const auto& v : rep.values) os << ' ' << v;
    os << '\n';
  }
  r.text = os.str();
  return r;
}

struct AnalyzeArgs {
  std::string space, seq, target, mode = "plain", tol = "1/1000000";
  std::size_t horizon = 10000;
};

Report cmd_analyze(const AnalyzeArgs& a) {
  const auto ls = load_space(a.space);
  const Tolerance t{Rational::parse(a.tol), a.horizon};
  const auto seq = load_sequence(a.seq, a.horizon);
  Report r;
  std::ostringstream os;
  if (a.mode == "cauchy" || a.mode == "cauchy-induced") {
    const bool induced = a.mode == "cauchy-induced";
    auto rep = ls.visit([&](const auto& s) { return induced ? is_cauchy_induced(s, seq, t) : is_cauchy(s, seq, t); });
    r.doc = to_json(rep);
    r.code = rep.verdict == CauchyVerdict::cauchy ? 0 : 1;
    os << seq.name() << ": " << cauchy_name(rep.verdict);
    if (rep.limit) os << " (limit " << *rep.limit << ", tail from " << rep.tail_start << ")";
    if (rep.witness) os << " (values " << rep.witness->low << " and " << rep.witness->high << " recur)";
    os << '\n';
  } else {
    if (a.target.empty()) throw ArgumentError("--target is required for mode " + a.mode);
    const Point x = parse_point(a.target);
    ConvergenceReport rep = ls.visit([&](const auto& s) {
      if (a.mode == "plain") return converges_to(s, seq, x, t);
      if (a.mode == "proper") return properly_converges(s, seq, x, t);
      if (a.mode == "induced") return converges_in_induced_metric(s, seq, x, t);
      throw ArgumentError("unknown mode '" + a.mode + "' (plain, proper, induced, cauchy, cauchy-induced)");
    });
    r.doc = to_json(rep);
    r.code = rep.certified() ? 0 : 1;
    os << seq.name() << " -> " << a.target << ": " << mode_name(rep.mode);
    if (rep.certified()) os << " (tail from " << rep.tail_start << ", gap " << rep.achieved_gap << ")";
    if (rep.witness)
      os << " (" << gap_kind_name(rep.witness->kind) << " gap " << rep.witness->gap << " at n = "
         << rep.witness->index << ")";
    os << (rep.exact ? " [exact]" : "") << '\n';
  }
  r.doc["space"] = ls.name;
  r.doc["sequence"] = seq.name();
  r.text = os.str();
  return r;
}

struct TopologyArgs {
  std::string space, eps = "1/2", seq;
  std::vector<std::string> centers;
  std::size_t horizon = 10000;
};

Report cmd_topology(const std::string& what, const TopologyArgs& a) {
  const auto ls = load_space(a.space);
  const auto fs = ls.table();
  Report r;
  std::ostringstream os;
  if (what == "separation") {
    auto rep = separation_class(fs);
    r.doc = to_json(rep);
    os << std::boolalpha << "T0 " << rep.t0 << ", T1 " << rep.t1 << ", Hausdorff " << rep.hausdorff << '\n';
  } else if (what == "gdelta") {
    auto rep = gdelta_diagonal(fs);
    r.doc = to_json(rep);
    os << "intersection of D_n " << (rep.equals_diagonal ? "equals" : "is larger than")
       << " the diagonal (stable from n = " << rep.stabilization_n << ", "
       << rep.off_diagonal.size() << " off-diagonal pairs)\n";
  } else if (what == "order") {
    auto rel = specialization_order(fs);
    r.doc = to_json(fs, rel);
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (i != j && rel(i, j)) os << fs.point(i) << " >= " << fs.point(j) << '\n';
  } else if (what == "maximal") {
    auto rep = maximal_points(fs);
    r.doc = to_json(rep);
    r.code = rep.cover_verified ? 0 : 1;
    os << "maximal points " << join_points(rep.maximal) << ", cover "
       << (rep.cover_verified ? "verified" : "fails") << '\n';
  } else if (what == "cover") {
    std::vector<Point> centers;
    for (const auto& c : a.centers) centers.push_back(parse_point(c));
    auto rep = ball_cover_check(fs, centers, Rational::parse(a.eps));
    r.doc = to_json(rep);
    r.code = rep.covers ? 0 : 1;
    os << (rep.covers ? "covered" : "not covered: " + to_string(*rep.uncovered) + " is outside every ball") << '\n';
  } else if (what == "net") {
    auto rep = totally_bounded_at(fs, Rational::parse(a.eps));
    r.doc = to_json(rep);
    os << a.eps << "-net of size " << rep.size() << ": " << join_points(rep.net) << '\n';
  } else if (what == "limits") {
    auto ls2 = limit_set(fs, load_sequence(a.seq, a.horizon));
    r.doc = Json{{"limits", json_detail::points(ls2)}};
    os << "limit set " << join_points(ls2) << '\n';
  } else if (what == "compact") {
    auto w = seq_compact_witness(fs, load_sequence(a.seq, a.horizon), Tolerance{Rational::parse(a.eps), a.horizon});
    r.doc = to_json(w);
    os << "convergent " << (w.kind == SubsequenceWitness::Kind::whole_sequence ? "sequence" : "constant subsequence")
       << " with limit " << w.limit << '\n';
  }
  r.doc["space"] = ls.name;
  r.text = os.str();
  return r;
}

struct FixedArgs {
  std::string space, map, condition = "max", alpha = "1/2", from, tol = "1/1000000";
  unsigned k = 1;
  std::size_t budget = 1000;
  std::vector<std::string> max_alphas, contraction_alphas;
  std::vector<unsigned> min_ks;
};

Condition make_condition(const std::string& kind, const Rational& alpha, unsigned k) {
  if (kind == "contraction") return Condition::contraction(alpha);
  if (kind == "max") return Condition::max_condition(alpha);
  if (kind == "min") return Condition::min_condition(k);
  throw ArgumentError("unknown condition '" + kind + "' (contraction, max, min)");
}

Report cmd_fixedpoint(const std::string& what, const FixedArgs& a) {
  const auto ls = load_space(a.space);
  Report r;
  std::ostringstream os;
  if (what == "enumerate") {
    const auto fs = ls.table();
    std::vector<Condition> cs;
    for (const auto& x : a.max_alphas) cs.push_back(Condition::max_condition(Rational::parse(x)));
    for (const auto& x : a.contraction_alphas) cs.push_back(Condition::contraction(Rational::parse(x)));
    for (auto k : a.min_ks) cs.push_back(Condition::min_condition(k));
    auto maps = exhaustive_condition_maps(fs, cs);
    Json conds = Json::array();
    for (const auto& c : cs) conds.push_back(c.describe());
    r.doc = Json{{"space", ls.name}, {"conditions", conds}, {"count", maps.size()}, {"maps", to_json(fs, maps)}};
    os << maps.size() << " of " << fs.size() << "^" << fs.size() << " maps satisfy every condition\n";
    for (const auto& m : maps) {
      for (std::size_t i = 0; i < m.image.size(); ++i)
        os << (i ? "  " : "  ") << fs.point(i) << "->" << fs.point(m.image[i]);
      os << '\n';
    }
    r.text = os.str();
    return r;
  }
  if (a.map.empty()) throw ArgumentError("--map is required");
  const MapSpec T = load_map(a.map);
  const Rational tol = Rational::parse(a.tol);
  if (what == "check") {
    auto rep = ls.visit([&](const auto& s) {
      return check_condition(s, T, make_condition(a.condition, Rational::parse(a.alpha), a.k));
    });
    r.doc = to_json(rep);
    r.code = rep.holds ? 0 : 1;
    os << T.name() << ' ' << rep.condition.describe() << ": "
       << (rep.holds ? "holds" : "violated") << " (" << rep.pairs_checked << " pairs checked"
       << (rep.exhaustive ? ")" : ", sample only)");
    if (rep.violation)
      os << "; at (" << rep.violation->x << ", " << rep.violation->y << ") " << rep.violation->lhs
         << " > " << rep.violation->rhs;
    os << '\n';
  } else if (what == "iterate") {
    if (a.from.empty()) throw ArgumentError("--from is required");
    auto tr = ls.visit([&](const auto& s) { return iterate(s, T, parse_point(a.from), tol, a.budget); });
    r.doc = to_json(tr);
    r.code = tr.outcome == IterationOutcome::fixed_point ? 0 : 1;
    os << outcome_name(tr.outcome);
    if (tr.fixed_point) os << ": " << *tr.fixed_point << (tr.exact ? " (exact)" : "");
    if (tr.cauchy_value) os << ": p(x_n, x_n+1) -> " << *tr.cauchy_value;
    os << " after " << tr.steps << " steps\n";
  } else if (what == "bottom") {
    if (a.from.empty()) throw ArgumentError("--from is required");
    auto res = ls.visit([&](const auto& s) {
      return solve_on_bottom(s, T, Rational::parse(a.alpha), parse_point(a.from), tol, a.budget);
    });
    r.doc = to_json(res);
    r.code = res.status == BottomSolveResult::Status::solved ? 0 : 1;
    os << status_name(res.status);
    if (res.fixed_point) os << ": " << *res.fixed_point << (res.unique_in_bottom ? " (unique in bottom set)" : "");
    if (res.escaping) os << ": " << *res.escaping << " -> " << *res.escaped_image << " leaves the bottom set";
    os << '\n';
  }
  r.doc["space"] = ls.name;
  r.doc["map"] = T.name();
  r.text = os.str();
  return r;
}

Report cmd_catalog_list() {
  const auto& c = standard_catalog();
  Json spaces = Json::array();
  std::ostringstream os;
  for (const auto& n : c.space_names()) {
    const auto& s = c.space(n);
    spaces.push_back(Json{{"id", n}, {"description", s.description()}, {"sample", json_detail::points(s.canonical_sample())}});
    os << n << "  " << s.description() << '\n';
  }
  Json maps = Json::array();
  for (const auto& m : c.map_names()) {
    maps.push_back(m);
    os << m << '\n';
  }
  return {Json{{"spaces", spaces}, {"maps", maps}}, os.str(), 0};
}

Report cmd_catalog_export(const std::string& id, std::optional<std::size_t> count, std::uint64_t seed) {
  const auto& s = standard_catalog().space(id);
  std::vector<Point> pts = s.canonical_sample();
  if (count) {
    for (auto& p : s.sample(seed, *count))
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  Report r{to_json(s.materialize(pts)), "", 0, true};
  r.text = id + ": " + std::to_string(pts.size()) + " points\n";
  return r;
}

Report cmd_catalog_verify(bool all, const std::vector<std::string>& entries) {
  if (!all && entries.empty()) throw ArgumentError("give --all or at least one --entry");
  for (const auto& e : entries) standard_catalog().space(e);
  auto res = fact_suite(standard_catalog(), all ? std::nullopt : std::optional(entries));
  std::ostringstream os;
  for (const auto& f : res.results)
    os << (f.pass ? "pass  " : "FAIL  ") << f.id << "  " << f.claim << (f.pass ? "" : "  [" + f.details + "]") << '\n';
  os << res.passed << " passed, " << res.failed << " failed\n";
  return {to_json(res), os.str(), res.pass() ? 0 : 1};
}

Report cmd_random_generate(std::uint64_t seed, std::size_t n, bool metric) {
  auto s = random_pm_space(seed, n, RandomSpaceOptions{metric});
  Report r{to_json(s), "", 0, true};
  r.doc["seed"] = seed;
  r.text = "seed " + std::to_string(seed) + ", " + std::to_string(n) + " points\n";
  return r;
}

Report cmd_property_run(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  if (max_n == 0) throw ArgumentError("--max-n must be >= 1");
  Json failures = Json::array();
  std::ostringstream os;
  os << "seeds " << seed << ".." << seed + count - 1 << ", n <= " << max_n << '\n';
  for (std::uint64_t s = seed; s < seed + count; ++s) {
    auto sp = random_pm_space(s, 1 + s % max_n);
    if (auto f = check_all_properties(sp, s)) {
      failures.push_back(Json{{"seed", s}, {"property", f->property}, {"detail", f->detail}});
      os << "seed " << s << ": " << f->property << ": " << f->detail << '\n';
    }
  }
  os << count - failures.size() << " of " << count << " spaces pass\n";
  const int code = failures.empty() ? 0 : 1;
  return {Json{{"seed", seed}, {"count", count}, {"max_n", max_n}, {"failures", failures}}, os.str(), code};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pm: partial metric space toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print one JSON document on stdout");

  std::function<Report()> action;

  auto* ax = app.add_subcommand("axioms", "Check P1-P4 on a space");
  std::string ax_space;
  ax->add_option("--space", ax_space, "Catalog id or JSON file")->required();
  ax->callback([&] { action = [&] { return cmd_axioms(ax_space); }; });

  auto* an = app.add_subcommand("analyze", "Convergence and Cauchy verdicts for a sequence");
  AnalyzeArgs aa;
  an->add_option("--space", aa.space)->required();
  an->add_option("--seq", aa.seq, "Generator id or JSON file")->required();
  an->add_option("--target", aa.target);
  an->add_option("--mode", aa.mode, "plain | proper | induced | cauchy | cauchy-induced");
  an->add_option("--tol", aa.tol);
  an->add_option("--horizon", aa.horizon)->check(CLI::PositiveNumber);
  an->callback([&] { action = [&] { return cmd_analyze(aa); }; });

  auto* top = app.add_subcommand("topology", "Separation, G-delta diagonal, order, covers and nets");
  top->require_subcommand(1);
  TopologyArgs ta;
  for (const char* what : {"separation", "gdelta", "order", "maximal", "cover", "net", "limits", "compact"}) {
    auto* sc = top->add_subcommand(what);
    sc->add_option("--space", ta.space)->required();
    if (std::string(what) == "cover") sc->add_option("--center", ta.centers)->required();
    if (std::string(what) == "cover" || std::string(what) == "net" || std::string(what) == "compact")
      sc->add_option("--eps", ta.eps, "Radius (or tolerance for compact)");
    if (std::string(what) == "limits" || std::string(what) == "compact") {
      sc->add_option("--seq", ta.seq)->required();
      sc->add_option("--horizon", ta.horizon)->check(CLI::PositiveNumber);
    }
    sc->callback([&, w = std::string(what)] { action = [&, w] { return cmd_topology(w, ta); }; });
  }

  auto* fp = app.add_subcommand("fixedpoint", "Contraction conditions and fixed points");
  fp->require_subcommand(1);
  FixedArgs fa;
  for (const char* what : {"check", "iterate", "bottom", "enumerate"}) {
    const std::string w = what;
    auto* sc = fp->add_subcommand(what);
    sc->add_option("--space", fa.space)->required();
    if (w == "enumerate") {
      sc->add_option("--max", fa.max_alphas, "Max condition with this alpha (repeatable)");
      sc->add_option("--contraction", fa.contraction_alphas, "Contraction with this alpha (repeatable)");
      sc->add_option("--min", fa.min_ks, "Min condition with this k (repeatable)");
    } else {
      sc->add_option("--map", fa.map, "Catalog map, identity, const.<point> or JSON file")->required();
      sc->add_option("--alpha", fa.alpha);
    }
    if (w == "check") {
      sc->add_option("--condition", fa.condition, "contraction | max | min");
      sc->add_option("--k", fa.k);
    }
    if (w == "iterate" || w == "bottom") {
      sc->add_option("--from", fa.from)->required();
      sc->add_option("--tol", fa.tol);
      sc->add_option("--budget", fa.budget);
    }
    sc->callback([&, w] { action = [&, w] { return cmd_fixedpoint(w, fa); }; });
  }

  auto* cat = app.add_subcommand("catalog", "Catalog listing, export and fact verification");
  cat->require_subcommand(1);
  cat->add_subcommand("list")->callback([&] { action = cmd_catalog_list; });
  auto* ex = cat->add_subcommand("export");
  std::string ex_id;
  std::optional<std::size_t> ex_count;
  std::uint64_t ex_seed = 0;
  ex->add_option("id", ex_id)->required();
  ex->add_option("--extra", ex_count, "Add this many sampled points");
  ex->add_option("--seed", ex_seed);
  ex->callback([&] { action = [&] { return cmd_catalog_export(ex_id, ex_count, resolve_seed(ex_seed)); }; });
  auto* ver = cat->add_subcommand("verify");
  bool ver_all = false;
  std::vector<std::string> ver_entries;
  ver->add_flag("--all", ver_all);
  ver->add_option("--entry", ver_entries);
  ver->callback([&] { action = [&] { return cmd_catalog_verify(ver_all, ver_entries); }; });

  auto* rnd = app.add_subcommand("random", "Random spaces and property runs");
  rnd->require_subcommand(1);
  std::uint64_t seed = 0;
  std::size_t n = 5, count = 200, max_n = 7;
  bool metric = false;
  auto* gen = rnd->add_subcommand("generate");
  gen->add_option("--seed", seed);
  gen->add_option("--n", n)->check(CLI::PositiveNumber);
  gen->add_flag("--metric", metric, "Zero self-distances");
  gen->callback([&] { action = [&] { return cmd_random_generate(resolve_seed(seed), n, metric); }; });
  auto* pr = rnd->add_subcommand("property-run");
  pr->add_option("--seed", seed, "First seed");
  pr->add_option("--count", count)->check(CLI::PositiveNumber);
  pr->add_option("--max-n", max_n);
  pr->callback([&] { action = [&] { return cmd_property_run(resolve_seed(seed), count, max_n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  Report r;
  try {
    r = action();
  } catch (const Error& e) {
    std::cerr << "pm: " << e.what() << '\n';
    if (json) std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
    return 2;
  }
  if (json || r.data) {
    std::cerr << r.text;
    std::cout << r.doc.dump(2) << '\n';
  } else {
    std::cout << r.text;
  }
  return r.code;
}
