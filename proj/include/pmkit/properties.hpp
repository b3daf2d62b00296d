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
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pmkit/analysis.hpp"
#include "pmkit/core.hpp"
#include "pmkit/fixedpoint.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/sequence.hpp"
#include "pmkit/space.hpp"
#include "pmkit/topology.hpp"

namespace pmkit {

/// First broken invariant of a finite space.
struct PropertyFailure {
  std::string property;
  std::string detail;
};

struct PropertyOptions {
  // Self-maps are enumerated only for spaces up to this size.
  std::size_t enumerate_up_to = 4;
  Rational alpha = Rational(1, 2);
  // Random periodic sequences per space for the convergence properties.
  std::size_t sequences = 6;
};

namespace props_detail {

inline std::string pt(const FinitePMSpace& s, std::size_t i) { return to_string(s.point(i)); }

template <class F>
std::optional<PropertyFailure> metric_axioms(const FinitePMSpace& s, const std::vector<std::size_t>& idx,
                                             const char* name, F&& dist) {
  for (auto x : idx)
    for (auto y : idx) {
      const Rational dxy = dist(x, y);
      if (dxy.sign() < 0) return PropertyFailure{name, "negative at " + pt(s, x) + "," + pt(s, y)};
      if ((dxy.sign() == 0) != (x == y))
        return PropertyFailure{name, "identity fails at " + pt(s, x) + "," + pt(s, y)};
      if (dxy != dist(y, x)) return PropertyFailure{name, "asymmetric at " + pt(s, x) + "," + pt(s, y)};
      for (auto z : idx)
        if (dxy > dist(x, z) + dist(z, y))
          return PropertyFailure{name, "triangle fails at " + pt(s, x) + "," + pt(s, y) + "," +
                                           pt(s, z)};
    }
  return std::nullopt;
}

inline std::vector<std::size_t> all_indices(const FinitePMSpace& s) {
  std::vector<std::size_t> v(s.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

inline std::vector<std::size_t> bottom_indices(const FinitePMSpace& s) {
  std::vector<std::size_t> v;
  const Rational rho = rho_p(s).value;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.at(i, i) == rho) v.push_back(i);
  return v;
}

// Random eventually periodic sequence over the points of s.
inline SequenceSpec random_sequence(const FinitePMSpace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(1, 5), pick(0, s.size() - 1);
  std::vector<Point> terms(len(rng));
  for (auto& t : terms) t = s.point(pick(rng));
  std::uniform_int_distribution<std::size_t> start(1, terms.size());
  return SequenceSpec::explicit_list(std::move(terms), start(rng));
}

}  // namespace props_detail

/// Core invariants: axioms, derived metrics, bottom set, separation, balls.
inline std::optional<PropertyFailure> check_core_properties(const FinitePMSpace& s) {
  using namespace props_detail;
  const auto rep = check_axioms(s);
  if (!rep.pass) return PropertyFailure{"axioms", std::string("fails ") + axiom_name(*rep.violated)};

  const auto all = all_indices(s);
  auto pm = [&](std::size_t x, std::size_t y) { return p_m(s, s.point(x), s.point(y)); };
  auto dm = [&](std::size_t x, std::size_t y) { return d_metric(s, s.point(x), s.point(y)); };
  auto pb = [&](std::size_t x, std::size_t y) { return p_bar(s, s.point(x), s.point(y)); };
  if (auto f = metric_axioms(s, all, "p_m metric", pm)) return f;
  if (auto f = metric_axioms(s, all, "D metric", dm)) return f;
  for (auto x : all)
    for (auto y : all)
      if (pm(x, y) > Rational(2) * dm(x, y))
        return PropertyFailure{"p_m <= 2D", pt(s, x) + "," + pt(s, y)};

  const Rational rho = rho_p(s).value;
  const auto bottom = bottom_indices(s);
  if (bottom.empty()) return PropertyFailure{"bottom set", "empty"};
  if (auto f = metric_axioms(s, bottom, "p_bar metric on bottom", pb)) return f;
  auto listed = bottom_set(s);
  if (listed.size() != bottom.size()) return PropertyFailure{"bottom set", "size mismatch"};
  for (std::size_t i = 0; i < bottom.size(); ++i)
    if (!(listed[i] == s.point(bottom[i]))) return PropertyFailure{"bottom set", "member mismatch"};
  for (auto x : all)
    for (auto y : all)
      if (s.at(x, y) < rho) return PropertyFailure{"rho lower bound", pt(s, x) + "," + pt(s, y)};

  if (!separation_class(s).t0) return PropertyFailure{"t0", "separation reports t0 = false"};

  // Every y in B(x, eps) has an induced-metric ball inside B(x, eps):
  // delta = p(x,x) + eps - p(x,y) works because p(y,z) - p(y,y) <= p_m(y,z).
  for (auto x : all)
    for (const auto& eps : candidate_radii(s, x)) {
      auto b = ball_indices(s, x, eps);
      std::vector<char> in(s.size(), 0);
      for (auto j : b) in[j] = 1;
      for (auto y : b) {
        const Rational delta = s.at(x, x) + eps - s.at(x, y);
        for (auto z : all)
          if (pm(y, z) < delta && !in[z])
            return PropertyFailure{"ball refinement", "B(" + pt(s, x) + ", " + eps.to_string() +
                                                          ") around " + pt(s, y) + " misses " +
                                                          pt(s, z)};
      }
    }
  return std::nullopt;
}

/// Order, maximal points, G-delta diagonal and sequence invariants.
inline std::optional<PropertyFailure> check_topology_properties(const FinitePMSpace& s,
                                                                std::uint64_t seed,
                                                                const PropertyOptions& o = {}) {
  using namespace props_detail;
  const auto all = all_indices(s);
  Relation order(0);
  try {
    order = specialization_order(s);
  } catch (const Error& e) {
    return PropertyFailure{"specialization order", e.what()};
  }
  for (auto x : all)
    for (auto y : all)
      if (x != y && order(x, y) && !(s.at(x, y) == s.at(x, x) && s.at(x, x) > s.at(y, y)))
        return PropertyFailure{"order strictness", pt(s, x) + " >= " + pt(s, y)};

  if (!maximal_points(s).cover_verified) return PropertyFailure{"maximal cover", "cover fails"};
  const auto g = gdelta_diagonal(s);
  if (g.t1 && !g.equals_diagonal) return PropertyFailure{"gdelta diagonal", "T1 but not equal"};
  if (g.t1 != separation_class(s).t1) return PropertyFailure{"gdelta diagonal", "t1 disagrees"};

  std::mt19937_64 rng(seed);
  const Tolerance exact{Rational(0), 64};
  for (std::size_t k = 0; k < o.sequences; ++k) {
    const auto seq = random_sequence(s, rng);
    const auto cauchy = is_cauchy(s, seq, exact);
    if ((cauchy.verdict == CauchyVerdict::cauchy) !=
        (is_cauchy_induced(s, seq, exact).verdict == CauchyVerdict::cauchy))
      return PropertyFailure{"cauchy equivalence", "sequence " + std::to_string(k)};
    const auto limits = limit_set(s, seq);
    for (auto x : all) {
      const Point& px = s.point(x);
      const bool plain = converges_to(s, seq, px, exact).certified();
      if (plain != (std::find(limits.begin(), limits.end(), px) != limits.end()))
        return PropertyFailure{"limit set", "disagrees at " + pt(s, x)};
      const bool proper = properly_converges(s, seq, px, exact).certified();
      if (proper != converges_in_induced_metric(s, seq, px, exact).certified())
        return PropertyFailure{"proper convergence equivalence", pt(s, x)};
      if (proper && is_cauchy(s, seq, Tolerance{Rational(0), 64}).verdict != CauchyVerdict::cauchy)
        return PropertyFailure{"proper implies cauchy", pt(s, x)};
      if (plain && in_bottom(s, px) && !proper)
        return PropertyFailure{"bottom convergence is proper", pt(s, x)};
    }
  }
  return std::nullopt;
}

/// Constant-map characterization of the bottom set, and for small spaces
/// the invariants of every map meeting the max or min condition.
inline std::optional<PropertyFailure> check_fixedpoint_properties(const FinitePMSpace& s,
                                                                  const PropertyOptions& o = {}) {
  using namespace props_detail;
  const std::array<Rational, 3> grid{Rational(0), Rational(1, 2), Rational(3, 4)};
  if (!constant_map_bottom(s, grid).equals_bottom)
    return PropertyFailure{"constant maps", "differ from the bottom set"};
  if (s.size() > o.enumerate_up_to) return std::nullopt;

  const auto bottom = bottom_indices(s);
  std::vector<char> in_b(s.size(), 0);
  for (auto b : bottom) in_b[b] = 1;
  const Rational rho = rho_p(s).value;
  auto pbar = [&](std::size_t x, std::size_t y) { return s.at(x, y) - rho; };

  const std::array<Condition, 1> max_c{Condition::max_condition(o.alpha)};
  for (const auto& t : exhaustive_condition_maps(s, max_c)) {
    for (auto b : bottom)
      if (!in_b[t.image[b]]) return PropertyFailure{"max condition closure", "bottom escapes"};
    for (auto x : bottom)
      for (auto y : bottom)
        if (pbar(t.image[x], t.image[y]) > o.alpha * pbar(x, y))
          return PropertyFailure{"bottom reduction", pt(s, x) + "," + pt(s, y)};
    // Continuity at bottom points: the sequence cycling through every y
    // with p(y,x) = p(x,x) converges to x; its image must converge to T(x).
    for (auto x : bottom) {
      std::vector<Point> near;
      for (std::size_t y = 0; y < s.size(); ++y)
        if (s.at(y, x) == s.at(x, x)) near.push_back(s.point(y));
      const auto seq = SequenceSpec::explicit_list(near);
      const auto img = seq.transformed("image", t.to_map(s));
      if (!converges_to(s, img, s.point(t.image[x]), {Rational(0), 64}).certified())
        return PropertyFailure{"continuity at bottom", pt(s, x)};
    }
  }
  for (unsigned k : {1u, 2u}) {
    const std::array<Condition, 1> min_c{Condition::min_condition(k)};
    for (const auto& t : exhaustive_condition_maps(s, min_c)) {
      std::size_t fixed = 0;
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (t.image[x] != x) continue;
        ++fixed;
        if (!in_b[x]) return PropertyFailure{"min condition fixed point", pt(s, x) + " not bottom"};
      }
      if (fixed > 1) return PropertyFailure{"min condition uniqueness", std::to_string(fixed)};
    }
  }
  return std::nullopt;
}

inline std::optional<PropertyFailure> check_all_properties(const FinitePMSpace& s,
                                                           std::uint64_t seed,
                                                           const PropertyOptions& o = {}) {
  if (auto f = check_core_properties(s)) return f;
  if (auto f = check_topology_properties(s, seed, o)) return f;
  return check_fixedpoint_properties(s, o);
}

/// On a metric space: the maps that are contractions (alpha) and meet the
/// min condition for k are exactly the contractions whose k-th iterate is
/// constant. Returns the number of survivors, or a failure.
struct IterateConstantCheck {
  std::size_t survivors = 0;
  std::size_t constant_iterates = 0;
  std::optional<PropertyFailure> failure;
};

inline IterateConstantCheck check_min_condition_iterates(const FinitePMSpace& s, unsigned k,
                                                         const Rational& alpha) {
  IterateConstantCheck out;
  const std::array<Condition, 1> contraction{Condition::contraction(alpha)};
  const std::array<Condition, 2> both{Condition::contraction(alpha), Condition::min_condition(k)};
  const auto survivors = exhaustive_condition_maps(s, both);
  out.survivors = survivors.size();
  std::vector<MapTable> constant;
  for (const auto& t : exhaustive_condition_maps(s, contraction)) {
    MapTable it = t;
    for (unsigned i = 1; i < k; ++i) it = compose(t, it);
    if (it.is_constant()) constant.push_back(t);
  }
  out.constant_iterates = constant.size();
  if (survivors != constant)
    out.failure = PropertyFailure{"min condition iff constant iterate",
                                  std::to_string(survivors.size()) + " survivors vs " +
                                      std::to_string(constant.size()) + " constant iterates"};
  return out;
}

}  // namespace pmkit
