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

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmkit/analysis.hpp"
#include "pmkit/catalog.hpp"
#include "pmkit/core.hpp"
#include "pmkit/errors.hpp"
#include "pmkit/fixedpoint.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/sequence.hpp"
#include "pmkit/topology.hpp"

namespace pmkit {

struct FactOutcome {
  bool pass = false;
  std::string details;
};

/// A claim about one catalog entry, checked by running the library on the
/// entry's canonical sample through the given catalog.
struct Fact {
  std::string id;
  std::string entry;
  std::string claim;
  std::function<FactOutcome(const Catalog&)> check;
};

struct FactResult {
  std::string id;
  std::string entry;
  std::string claim;
  bool pass = false;
  std::string details;
};

struct FactSuiteResult {
  std::vector<FactResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool pass() const { return failed == 0; }
};

namespace facts_detail {

inline FactOutcome verdict(bool ok, std::string details) { return {ok, std::move(details)}; }

inline std::string join(const std::vector<Point>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += to_string(pts[i]);
  }
  return out + "}";
}

inline bool same_set(std::vector<Point> a, std::vector<Point> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline Point q(long long n, long long d = 1) { return Rational(n, d); }

inline FactOutcome axioms_on_sample(const Catalog& c, const std::string& entry) {
  const auto& s = c.space(entry);
  auto rep = check_axioms(s.materialize());
  if (rep.pass) return verdict(true, std::to_string(s.canonical_sample().size()) + " points");
  return verdict(false, std::string("violates ") + axiom_name(*rep.violated));
}

inline FactOutcome declarations_on_sample(const Catalog& c, const std::string& entry) {
  const auto& s = c.space(entry);
  auto pts = s.canonical_sample();
  auto drawn = s.sample(0, 32);
  pts.insert(pts.end(), drawn.begin(), drawn.end());
  auto problems = validate_declarations(s, pts);
  if (problems.empty()) return verdict(true, std::to_string(pts.size()) + " points");
  return verdict(false, problems.front());
}

inline FactOutcome induced_is_abs_difference(const Catalog& c, const std::string& entry) {
  const auto& s = c.space(entry);
  auto pts = s.canonical_sample();
  auto drawn = s.sample(0, 50);
  pts.insert(pts.end(), drawn.begin(), drawn.end());
  for (const auto& x : pts)
    for (const auto& y : pts) {
      Rational want = abs(std::get<Rational>(x) - std::get<Rational>(y));
      if (p_m(s, x, y) != want)
        return verdict(false, "p_m(" + to_string(x) + "," + to_string(y) + ") = " +
                                  p_m(s, x, y).to_string());
    }
  return verdict(true, std::to_string(pts.size() * pts.size()) + " pairs");
}

// Fixed points of T among the canonical sample.
inline std::vector<Point> sample_fixed_points(const CatalogSpace& s, const MapSpec& T) {
  std::vector<Point> out;
  for (const auto& x : s.canonical_sample())
    if (T(x) == x) out.push_back(x);
  return out;
}

}  // namespace facts_detail

/// Every fact attached to the standard catalog entries, in entry order.
inline std::vector<Fact> catalog_facts() {
  using namespace facts_detail;
  std::vector<Fact> f;
  auto add = [&](std::string id, std::string entry, std::string claim,
                 std::function<FactOutcome(const Catalog&)> check) {
    f.push_back({std::move(id), std::move(entry), std::move(claim), std::move(check)});
  };

  for (const char* e :
       {"ex3.1", "ex3.2", "ex3.4", "ex4.4", "ex4.8", "ex5.4", "ex5.5", "ex5.6", "ex5.8", "apex"}) {
    const std::string entry = e;
    add(entry + ".axioms", entry, "canonical sample is a partial metric space",
        [entry](const Catalog& c) { return axioms_on_sample(c, entry); });
    add(entry + ".declared", entry, "sampled points agree with the declared rho and bottom set",
        [entry](const Catalog& c) { return declarations_on_sample(c, entry); });
  }

  // ex3.1
  add("ex3.1.rho", "ex3.1", "rho = 1", [](const Catalog& c) {
    const auto& r = c.space("ex3.1").declared_rho();
    return verdict(r && *r == Rational(1), r ? r->to_string() : "undeclared");
  });
  add("ex3.1.induced", "ex3.1", "p_m(x,y) = |x-y|",
      [](const Catalog& c) { return induced_is_abs_difference(c, "ex3.1"); });

  // ex3.2
  add("ex3.2.alternating-converges", "ex3.2", "{a},{b},{a},... converges to {a,b} with gap 0",
      [](const Catalog& c) {
        auto seq = SequenceSpec::explicit_list({set_of("a"), set_of("b")});
        auto rep = converges_to(c.space("ex3.2"), seq, set_of("ab"), {Rational(0), 2});
        return verdict(rep.certified() && rep.exact && rep.achieved_gap.sign() == 0,
                       std::string(mode_name(rep.mode)) + ", gap " + rep.achieved_gap.to_string());
      });
  add("ex3.2.alternating-not-cauchy", "ex3.2", "{a},{b},{a},... is not Cauchy (values 1 and 2)",
      [](const Catalog& c) {
        auto seq = SequenceSpec::explicit_list({set_of("a"), set_of("b")});
        auto rep = is_cauchy(c.space("ex3.2"), seq, {Rational(0), 2});
        bool ok = rep.verdict == CauchyVerdict::refuted && rep.witness &&
                  rep.witness->low == Rational(1) && rep.witness->high == Rational(2);
        return verdict(ok, cauchy_name(rep.verdict));
      });

  // ex3.4
  add("ex3.4.contraction", "ex3.4", "T is a contraction with alpha = 2/3", [](const Catalog& c) {
    auto rep = check_contraction(c.space("ex3.4"), c.map("ex3.4.T"), Rational(2, 3));
    return verdict(rep.holds, std::to_string(rep.pairs_checked) + " pairs");
  });
  add("ex3.4.bottom", "ex3.4", "bottom set is {-5}", [](const Catalog& c) {
    auto b = bottom_set(c.space("ex3.4").materialize());
    return verdict(same_set(b, {q(-5)}), join(b));
  });
  add("ex3.4.iterate", "ex3.4", "iteration from every sample point reaches -5 within 5 steps",
      [](const Catalog& c) {
        const auto& s = c.space("ex3.4");
        const auto T = c.map("ex3.4.T");
        for (const auto& x : s.canonical_sample()) {
          auto tr = iterate(s, T, x, Rational(0), 5);
          if (!tr.fixed_point || !(*tr.fixed_point == q(-5)) || !tr.exact)
            return verdict(false, "from " + to_string(x) + ": " + outcome_name(tr.outcome));
        }
        return verdict(true, "all sample points");
      });
  add("ex3.4.discontinuous", "ex3.4",
      "1/n converges to every x >= 0 in the sample, T(1/n) converges to no T(x)",
      [](const Catalog& c) {
        const auto& s = c.space("ex3.4");
        const auto T = c.map("ex3.4.T");
        auto inv = c.sequence("inverse", 100);
        auto img = c.sequence("image:ex3.4.T:inverse", 100);
        for (const auto& x : s.canonical_sample()) {
          if (std::get<Rational>(x).sign() < 0) continue;
          // p(1/n, 0) - p(0, 0) = 1/n: zero gap is out of reach at x = 0.
          Rational tol = std::get<Rational>(x).sign() == 0 ? Rational(1, 50) : Rational(0);
          if (!converges_to(s, inv, x, {tol, 100}).certified())
            return verdict(false, "1/n does not certify at " + to_string(x));
          auto r = converges_to(s, img, T(x), {Rational(0), 100});
          if (r.mode != ConvergenceMode::refuted)
            return verdict(false, "T(1/n) not refuted at T(" + to_string(x) + ")");
        }
        return verdict(true, "sample points >= 0");
      });
  add("ex3.4.unique-fixed-point", "ex3.4", "-5 is the only fixed point in the sample",
      [](const Catalog& c) {
        auto fp = sample_fixed_points(c.space("ex3.4"), c.map("ex3.4.T"));
        return verdict(same_set(fp, {q(-5)}), join(fp));
      });

  // ex4.4
  add("ex4.4.single-ball", "ex4.4", "B(1, eps) covers the sample", [](const Catalog& c) {
    auto fs = c.space("ex4.4").materialize();
    for (const auto& eps : {Rational(1, 10), Rational(1, 2), Rational(1)})
      if (!ball_cover_check(fs, {q(1)}, eps).covers)
        return verdict(false, "fails at eps " + eps.to_string());
    return verdict(true, "eps in {1/10, 1/2, 1}");
  });
  add("ex4.4.induced", "ex4.4", "p_m(x,y) = |x-y|",
      [](const Catalog& c) { return induced_is_abs_difference(c, "ex4.4"); });

  // ex4.8
  add("ex4.8.separated", "ex4.8", "p(n,m) > 1 for distinct n, m <= 50", [](const Catalog& c) {
    const auto& s = c.space("ex4.8");
    for (long long n = 0; n <= 50; ++n)
      for (long long m = 0; m <= 50; ++m)
        if (n != m && !(s.distance(q(n), q(m)) > Rational(1)))
          return verdict(false, "p(" + std::to_string(n) + "," + std::to_string(m) + ") <= 1");
    return verdict(true, "51 points");
  });
  add("ex4.8.converges-to-0", "ex4.8", "n converges to 0 (tol 1/25, tail from 25)",
      [](const Catalog& c) {
        auto rep = converges_to(c.space("ex4.8"), c.sequence("natural", 100), q(0),
                                {Rational(1, 25), 100});
        return verdict(rep.certified() && rep.tail_start == 25,
                       std::string(mode_name(rep.mode)) + ", tail " + std::to_string(rep.tail_start));
      });
  add("ex4.8.cauchy-to-1", "ex4.8", "n is 1-Cauchy", [](const Catalog& c) {
    auto rep = is_cauchy(c.space("ex4.8"), c.sequence("natural", 10000), {Rational(1, 1000), 10000});
    return verdict(rep.verdict == CauchyVerdict::cauchy && rep.limit && *rep.limit == Rational(1),
                   rep.limit ? rep.limit->to_string() : cauchy_name(rep.verdict));
  });
  add("ex4.8.d-metric", "ex4.8", "D(2,3) = 11/6", [](const Catalog& c) {
    auto v = d_metric(c.space("ex4.8"), q(2), q(3));
    return verdict(v == Rational(11, 6), v.to_string());
  });

  // ex5.4
  add("ex5.4.max-condition", "ex5.4", "T meets the max condition with alpha = 1/2",
      [](const Catalog& c) {
        auto rep = check_condition_max(c.space("ex5.4"), c.map("ex5.4.T"), Rational(1, 2));
        return verdict(rep.holds, std::to_string(rep.pairs_checked) + " pairs");
      });
  add("ex5.4.fixed-points", "ex5.4", "fixed points in the sample are exactly 1 and 2",
      [](const Catalog& c) {
        auto fp = sample_fixed_points(c.space("ex5.4"), c.map("ex5.4.T"));
        return verdict(same_set(fp, {q(1), q(2)}), join(fp));
      });
  add("ex5.4.iterate", "ex5.4", "iteration from 0 reaches 1, from 3 reaches 2",
      [](const Catalog& c) {
        const auto& s = c.space("ex5.4");
        const auto T = c.map("ex5.4.T");
        auto a = iterate(s, T, q(0), Tolerance{}.tol, 200);
        auto b = iterate(s, T, q(3), Tolerance{}.tol, 200);
        bool ok = a.fixed_point && *a.fixed_point == q(1) && b.fixed_point && *b.fixed_point == q(2);
        return verdict(ok, "from 0: " + (a.fixed_point ? to_string(*a.fixed_point) : "none") +
                               ", from 3: " + (b.fixed_point ? to_string(*b.fixed_point) : "none"));
      });
  add("ex5.4.bottom", "ex5.4", "bottom set of the sample is {0, 1/2, 3/4, 1}; 2 is not in it",
      [](const Catalog& c) {
        auto b = bottom_set(c.space("ex5.4").materialize());
        bool ok = same_set(b, {q(0), q(1, 2), q(3, 4), q(1)}) &&
                  std::find(b.begin(), b.end(), q(2)) == b.end();
        return verdict(ok, join(b));
      });
  add("ex5.4.bottom-solve", "ex5.4", "iteration on the bottom set from 0 gives 1, uniquely",
      [](const Catalog& c) {
        auto r = solve_on_bottom(c.space("ex5.4"), c.map("ex5.4.T"), Rational(1, 2), q(0),
                                 Tolerance{}.tol, 200);
        bool ok = r.status == BottomSolveResult::Status::solved && r.fixed_point &&
                  *r.fixed_point == q(1) && r.reduction_holds && r.unique_in_bottom;
        return verdict(ok, r.fixed_point ? to_string(*r.fixed_point) : "no fixed point");
      });

  // ex5.5
  add("ex5.5.converges-not-properly", "ex5.5",
      "1/n converges to 0 but the convergence is not proper", [](const Catalog& c) {
        const auto& s = c.space("ex5.5");
        auto seq = c.sequence("inverse", 1000);
        auto plain = converges_to(s, seq, q(0), {Rational(0), 1000});
        auto proper = properly_converges(s, seq, q(0), {Rational(0), 1000});
        bool ok = plain.certified() && proper.mode == ConvergenceMode::refuted && proper.witness &&
                  proper.witness->kind == GapKind::self_distance;
        return verdict(ok, std::string(mode_name(plain.mode)) + " / " + mode_name(proper.mode));
      });
  add("ex5.5.constant-maps", "ex5.5", "T_z meets the max condition exactly for z != 0",
      [](const Catalog& c) {
        const std::array<Rational, 3> grid{Rational(0), Rational(1, 2), Rational(3, 4)};
        auto rep = constant_map_bottom(c.space("ex5.5").materialize(), grid);
        return verdict(same_set(rep.points, {q(1, 2), q(1, 3), q(1)}) && rep.equals_bottom,
                       join(rep.points));
      });

  // ex5.6
  add("ex5.6.no-bottom", "ex5.6", "rho = 0 is not attained: no sampled point is in the bottom set",
      [](const Catalog& c) {
        const auto& s = c.space("ex5.6");
        auto pts = s.canonical_sample();
        auto drawn = s.sample(0, 64);
        pts.insert(pts.end(), drawn.begin(), drawn.end());
        for (const auto& x : pts)
          if (s.distance(x, x) == reference_rho(s))
            return verdict(false, to_string(x) + " attains rho");
        return verdict(s.declared_bottom().is_empty(), "truncation minimum " +
                                                           rho_p(s.materialize()).value.to_string());
      });
  add("ex5.6.no-constant-map", "ex5.6", "every sampled constant map fails the max condition",
      [](const Catalog& c) {
        const auto& s = c.space("ex5.6");
        auto witnesses = s.canonical_sample();
        auto drawn = s.sample(0, 64);
        witnesses.insert(witnesses.end(), drawn.begin(), drawn.end());
        const auto pairs = all_pairs(witnesses);
        for (const auto& z : s.canonical_sample()) {
          auto rep = check_condition_max(s, MapSpec::constant(z), Rational(0), pairs);
          if (rep.holds) return verdict(false, "T_" + to_string(z) + " holds on the sample");
        }
        return verdict(true, std::to_string(witnesses.size()) + " witness points");
      });
  add("ex5.6.everything-converges-to-0", "ex5.6", "0 is a limit of every sample sequence",
      [](const Catalog& c) {
        auto fs = c.space("ex5.6").materialize();
        std::vector<SequenceSpec> seqs;
        for (const auto& x : fs.points()) seqs.push_back(SequenceSpec::explicit_list({x}));
        seqs.push_back(SequenceSpec::explicit_list(fs.points()));
        seqs.push_back(SequenceSpec::explicit_list({q(1, 2), q(1, 3), q(1, 4)}));
        for (const auto& seq : seqs) {
          auto ls = limit_set(fs, seq);
          if (std::find(ls.begin(), ls.end(), q(0)) == ls.end())
            return verdict(false, "0 missing from a limit set");
        }
        return verdict(true, std::to_string(seqs.size()) + " sequences");
      });
  add("ex5.6.not-hausdorff", "ex5.6", "the sample is neither T1 nor Hausdorff",
      [](const Catalog& c) {
        auto sep = separation_class(c.space("ex5.6").materialize());
        return verdict(sep.t0 && !sep.t1 && !sep.hausdorff,
                       std::string("t1=") + (sep.t1 ? "true" : "false") +
                           " hausdorff=" + (sep.hausdorff ? "true" : "false"));
      });

  // ex5.8
  add("ex5.8.only-constant-a", "ex5.8", "T_a is the only map meeting the max condition",
      [](const Catalog& c) {
        auto fs = c.space("ex5.8").materialize();
        std::vector<Condition> conds{Condition::max_condition(Rational(0)),
                                     Condition::max_condition(Rational(1, 2)),
                                     Condition::max_condition(Rational(3, 4))};
        auto maps = exhaustive_condition_maps(fs, conds);
        const auto ia = fs.require_index(tag("a"));
        bool ok = maps.size() == 1 && maps[0].image == std::vector<std::size_t>(fs.size(), ia);
        return verdict(ok, std::to_string(maps.size()) + " survivors");
      });
  add("ex5.8.constant-maps", "ex5.8", "constant maps meeting the max condition give {a}",
      [](const Catalog& c) {
        const std::array<Rational, 1> grid{Rational(0)};
        auto rep = constant_map_bottom(c.space("ex5.8").materialize(), grid);
        return verdict(same_set(rep.points, {tag("a")}), join(rep.points));
      });
  add("ex5.8.t1", "ex5.8", "the space is T1 with diagonal D_1", [](const Catalog& c) {
    auto g = gdelta_diagonal(c.space("ex5.8").materialize());
    return verdict(g.t1 && g.equals_diagonal && g.stabilization_n == 1,
                   "n0 = " + std::to_string(g.stabilization_n));
  });

  // apex
  add("apex.net", "apex", "eps = 1/2: whole space needs 1 ball, X alone needs |X|",
      [](const Catalog&) {
        auto fs = apex_space(32);
        std::vector<Point> xs(fs.points().begin(), fs.points().end() - 1);
        auto whole = totally_bounded_at(fs, Rational(1, 2));
        auto sub = totally_bounded_at(fs.restrict(xs), Rational(1, 2));
        bool ok = whole.net.size() == 1 && whole.net[0] == tag("a") && sub.net.size() == 32;
        return verdict(ok, std::to_string(whole.net.size()) + " vs " +
                               std::to_string(sub.net.size()));
      });
  add("apex.maximal", "apex", "a is the only maximal point and B(a, eps) is everything",
      [](const Catalog&) {
        auto rep = maximal_points(apex_space(4));
        return verdict(same_set(rep.maximal, {tag("a")}) && rep.cover_verified,
                       join(rep.maximal));
      });
  add("apex.x-cover", "apex", "balls of radius 1/2 around X miss a", [](const Catalog&) {
    auto fs = apex_space(4);
    std::vector<Point> xs(fs.points().begin(), fs.points().end() - 1);
    auto rep = ball_cover_check(fs, xs, Rational(1, 2));
    return verdict(!rep.covers && rep.uncovered && *rep.uncovered == tag("a"),
                   rep.covers ? "covers" : "misses " + to_string(*rep.uncovered));
  });
  return f;
}

/// Runs the facts of the listed entries (all entries when `entries` is
/// unset). A check that throws is a failed fact.
inline FactSuiteResult fact_suite(const Catalog& c,
                                  const std::optional<std::vector<std::string>>& entries = {}) {
  FactSuiteResult out;
  for (const auto& f : catalog_facts()) {
    if (entries && std::find(entries->begin(), entries->end(), f.entry) == entries->end()) continue;
    FactResult r{f.id, f.entry, f.claim, false, {}};
    try {
      auto o = f.check(c);
      r.pass = o.pass;
      r.details = std::move(o.details);
    } catch (const std::exception& e) {
      r.details = std::string("error: ") + e.what();
    }
    (r.pass ? out.passed : out.failed)++;
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace pmkit
