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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmkit/core.hpp"
#include "pmkit/errors.hpp"
#include "pmkit/map.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/space.hpp"

namespace pmkit {

using PointPair = std::pair<Point, Point>;

/// Unordered pairs (x_i, x_j), i <= j. Every condition below is symmetric
/// in (x, y), so this covers all ordered pairs.
inline std::vector<PointPair> all_pairs(const std::vector<Point>& pts) {
  std::vector<PointPair> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) out.emplace_back(pts[i], pts[j]);
  return out;
}

/// Pairs a condition is checked on by default: every pair of a finite
/// space, the canonical sample of a catalog space.
inline std::vector<PointPair> default_pairs(const FinitePMSpace& s) { return all_pairs(s.points()); }
inline std::vector<PointPair> default_pairs(const CatalogSpace& s) {
  return all_pairs(s.canonical_sample());
}
inline constexpr bool pairs_are_exhaustive(const FinitePMSpace&) { return true; }
inline constexpr bool pairs_are_exhaustive(const CatalogSpace&) { return false; }

// Conditions -----------------------------------------------------------------

enum class ConditionKind { contraction, max_condition, min_condition };

inline const char* condition_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::contraction: return "contraction";
    case ConditionKind::max_condition: return "max";
    case ConditionKind::min_condition: return "min";
  }
  return "?";
}

/// One of
///   contraction(a): p(Tx, Ty) <= a p(x, y)
///   max(a):         p(Tx, Ty) <= max{a p(x, y), p(x, x), p(y, y)}
///   min(k):         min_{1<=i<=k} p(T^i x, T^i y) <= (p(x, x) + p(y, y)) / 2
struct Condition {
  ConditionKind kind = ConditionKind::max_condition;
  Rational alpha;
  unsigned k = 1;

  static Condition contraction(Rational a) { return {ConditionKind::contraction, std::move(a), 1}; }
  static Condition max_condition(Rational a) { return {ConditionKind::max_condition, std::move(a), 1}; }
  static Condition min_condition(unsigned k) { return {ConditionKind::min_condition, Rational(0), k}; }

  void validate() const {
    if (kind == ConditionKind::min_condition) {
      if (k == 0) throw ArgumentError("min condition needs k >= 1");
    } else if (alpha.sign() < 0 || alpha >= Rational(1)) {
      throw ArgumentError("alpha must lie in [0, 1), got " + alpha.to_string());
    }
  }

  std::string describe() const {
    if (kind == ConditionKind::min_condition) return "min(k=" + std::to_string(k) + ")";
    return std::string(condition_name(kind)) + "(alpha=" + alpha.to_string() + ")";
  }
};

struct ConditionViolation {
  Point x, y;
  Rational lhs, rhs;
};

struct ConditionReport {
  Condition condition;
  bool holds = true;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  std::optional<ConditionViolation> violation;
};

/// Left and right sides of a condition at (x, y).
template <PartialMetricSpace S>
std::pair<Rational, Rational> condition_sides(const S& s, const MapSpec& T, const Condition& c,
                                              const Point& x, const Point& y) {
  switch (c.kind) {
    case ConditionKind::contraction:
      return {s.distance(apply_in(s, T, x), apply_in(s, T, y)), c.alpha * s.distance(x, y)};
    case ConditionKind::max_condition: {
      Rational rhs = std::max({c.alpha * s.distance(x, y), s.distance(x, x), s.distance(y, y)});
      return {s.distance(apply_in(s, T, x), apply_in(s, T, y)), rhs};
    }
    case ConditionKind::min_condition: {
      Point tx = x, ty = y;
      std::optional<Rational> best;
      for (unsigned i = 0; i < c.k; ++i) {
        tx = apply_in(s, T, tx);
        ty = apply_in(s, T, ty);
        Rational v = s.distance(tx, ty);
        if (!best || v < *best) best = v;
      }
      return {*best, (s.distance(x, x) + s.distance(y, y)) / Rational(2)};
    }
  }
  throw InvariantViolation("unknown condition");
}

template <PartialMetricSpace S>
ConditionReport check_condition(const S& s, const MapSpec& T, const Condition& c,
                                const std::vector<PointPair>& pairs, bool exhaustive = false) {
  c.validate();
  ConditionReport rep;
  rep.condition = c;
  rep.exhaustive = exhaustive;
  for (const auto& [x, y] : pairs) {
    ++rep.pairs_checked;
    auto [lhs, rhs] = condition_sides(s, T, c, x, y);
    if (lhs > rhs) {
      rep.holds = false;
      rep.violation = ConditionViolation{x, y, std::move(lhs), std::move(rhs)};
      return rep;
    }
  }
  return rep;
}

template <class S>
ConditionReport check_condition(const S& s, const MapSpec& T, const Condition& c) {
  return check_condition(s, T, c, default_pairs(s), pairs_are_exhaustive(s));
}

template <PartialMetricSpace S>
ConditionReport check_contraction(const S& s, const MapSpec& T, const Rational& alpha,
                                  const std::vector<PointPair>& pairs) {
  return check_condition(s, T, Condition::contraction(alpha), pairs);
}
template <class S>
ConditionReport check_contraction(const S& s, const MapSpec& T, const Rational& alpha) {
  return check_condition(s, T, Condition::contraction(alpha));
}

template <PartialMetricSpace S>
ConditionReport check_condition_max(const S& s, const MapSpec& T, const Rational& alpha,
                                    const std::vector<PointPair>& pairs) {
  return check_condition(s, T, Condition::max_condition(alpha), pairs);
}
template <class S>
ConditionReport check_condition_max(const S& s, const MapSpec& T, const Rational& alpha) {
  return check_condition(s, T, Condition::max_condition(alpha));
}

template <PartialMetricSpace S>
ConditionReport check_condition_min(const S& s, const MapSpec& T, unsigned k,
                                    const std::vector<PointPair>& pairs) {
  return check_condition(s, T, Condition::min_condition(k), pairs);
}
template <class S>
ConditionReport check_condition_min(const S& s, const MapSpec& T, unsigned k) {
  return check_condition(s, T, Condition::min_condition(k));
}

// Iteration --------------------------------------------------------------------

/// Consecutive steps the gap must stay within tolerance before an
/// iteration is considered settled.
inline constexpr std::size_t kConfirmationWindow = 8;

enum class IterationOutcome { fixed_point, certified_cauchy, budget_exhausted };

inline const char* outcome_name(IterationOutcome o) {
  switch (o) {
    case IterationOutcome::fixed_point: return "fixed_point";
    case IterationOutcome::certified_cauchy: return "certified_cauchy";
    case IterationOutcome::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

/// iterates[0] is the start; p_next[n] = p(x_n, x_{n+1}) and
/// p_self[n] = p(x_n, x_n) for every applied step.
struct IterationTrace {
  Point start;
  std::vector<Point> iterates;
  std::vector<Rational> p_next;
  std::vector<Rational> p_self;
  IterationOutcome outcome = IterationOutcome::budget_exhausted;
  std::optional<Point> fixed_point;
  bool exact = false;  // T(fixed_point) == fixed_point verified
  std::optional<Rational> cauchy_value;
  std::size_t steps = 0;  // applications of T
};

namespace detail {

// Looks for an exact fixed point of T near a settled rational iterate: the
// simplest rational within tol of x, accepted only if T fixes it and x is
// within tol of it in the partial metric.
template <PartialMetricSpace S>
std::optional<Point> snap_fixed_point(const S& s, const MapSpec& T, const Point& x,
                                      const Rational& tol) {
  auto* r = std::get_if<Rational>(&x);
  if (!r) return std::nullopt;
  Point c = simplest_between(*r - tol, *r + tol);
  if (!s.contains(c)) return std::nullopt;
  Point tc = T(c);
  if (!(tc == c)) return std::nullopt;
  if (abs(s.distance(x, c) - s.distance(c, c)) > tol) return std::nullopt;
  return c;
}

}  // namespace detail

/// Picard iteration x_{n+1} = T(x_n). Stops at an exact fixed point, or
/// once p(x_n, x_{n+1}) - min(p(x_n, x_n), p(x_{n+1}, x_{n+1})) has stayed
/// <= tol for kConfirmationWindow consecutive steps, or when the budget
/// runs out.
template <PartialMetricSpace S>
IterationTrace iterate(const S& s, const MapSpec& T, const Point& x0, const Rational& tol,
                       std::size_t budget) {
  if (budget == 0) throw ArgumentError("iteration budget must be >= 1");
  if (tol.sign() < 0) throw ArgumentError("tolerance must be >= 0");
  if (!s.contains(x0)) throw DomainError("start '" + to_string(x0) + "' is not in the space");
  IterationTrace tr;
  tr.start = x0;
  tr.iterates.push_back(x0);
  Point x = x0;
  std::size_t window = 0;
  for (std::size_t step = 1; step <= budget; ++step) {
    Point y = apply_in(s, T, x);
    tr.steps = step;
    const Rational pxy = s.distance(x, y);
    const Rational pxx = s.distance(x, x);
    tr.p_next.push_back(pxy);
    tr.p_self.push_back(pxx);
    if (y == x) {
      tr.outcome = IterationOutcome::fixed_point;
      tr.fixed_point = x;
      tr.exact = true;
      return tr;
    }
    const Rational gap = pxy - std::min(pxx, s.distance(y, y));
    window = gap <= tol ? window + 1 : 0;
    tr.iterates.push_back(y);
    x = std::move(y);
    if (window >= kConfirmationWindow) {
      if (auto c = detail::snap_fixed_point(s, T, x, tol)) {
        tr.outcome = IterationOutcome::fixed_point;
        tr.fixed_point = *c;
        tr.exact = true;
      } else {
        tr.outcome = IterationOutcome::certified_cauchy;
        tr.cauchy_value = simplest_between(pxy - tol, pxy + tol);
      }
      return tr;
    }
  }
  tr.outcome = IterationOutcome::budget_exhausted;
  return tr;
}

// Bottom-set reduction ----------------------------------------------------------

inline std::vector<Point> bottom_points(const FinitePMSpace& s) { return bottom_set(s); }
inline std::vector<Point> bottom_points(const CatalogSpace& s) {
  std::vector<Point> out;
  for (const auto& p : s.canonical_sample())
    if (s.in_declared_bottom(p)) out.push_back(p);
  return out;
}

struct BottomSolveResult {
  enum class Status { solved, contradiction, budget_exhausted };
  Status status = Status::budget_exhausted;
  std::optional<Point> fixed_point;
  bool exact = false;
  std::size_t steps = 0;
  bool exhaustive = false;            // bottom points are the whole bottom set
  std::vector<Point> bottom_checked;  // where closure and uniqueness were checked
  bool reduction_holds = true;        // pbar(Tx, Ty) <= alpha pbar(x, y) on those points
  std::optional<PointPair> reduction_violation;
  std::size_t fixed_points_in_bottom = 0;
  bool unique_in_bottom = false;
  // Set when T sends a bottom point outside the bottom set.
  std::optional<Point> escaping, escaped_image;
  std::optional<ConditionReport> witness_search;
};

/// Banach iteration of T restricted to the bottom set under the metric
/// pbar = p - rho. First checks T(bottom) is inside the bottom set; if not,
/// the max condition must fail somewhere and a full condition scan looks for
/// the violating pair.
template <class S>
BottomSolveResult solve_on_bottom(const S& s, const MapSpec& T, const Rational& alpha,
                                  const Point& x0, const Rational& tol, std::size_t budget) {
  Condition::max_condition(alpha).validate();
  if (budget == 0) throw ArgumentError("iteration budget must be >= 1");
  if (!s.contains(x0) || !in_bottom(s, x0))
    throw ArgumentError("start '" + to_string(x0) + "' is not in the bottom set");

  BottomSolveResult res;
  res.exhaustive = pairs_are_exhaustive(s);
  res.bottom_checked = bottom_points(s);
  if (std::find(res.bottom_checked.begin(), res.bottom_checked.end(), x0) == res.bottom_checked.end())
    res.bottom_checked.push_back(x0);

  for (const auto& z : res.bottom_checked) {
    Point tz = apply_in(s, T, z);
    if (!in_bottom(s, tz)) {
      res.status = BottomSolveResult::Status::contradiction;
      res.escaping = z;
      res.escaped_image = tz;
      res.witness_search = check_condition_max(s, T, alpha);
      return res;
    }
  }

  for (const auto& [x, y] : all_pairs(res.bottom_checked)) {
    if (p_bar(s, T(x), T(y)) > alpha * p_bar(s, x, y)) {
      res.reduction_holds = false;
      res.reduction_violation = PointPair{x, y};
      break;
    }
  }

  Point x = x0;
  for (std::size_t step = 1; step <= budget; ++step) {
    Point y = apply_in(s, T, x);
    res.steps = step;
    if (y == x) {
      res.status = BottomSolveResult::Status::solved;
      res.fixed_point = x;
      res.exact = true;
      break;
    }
    if (p_bar(s, x, y) <= tol) {
      res.status = BottomSolveResult::Status::solved;
      auto c = detail::snap_fixed_point(s, T, y, tol);
      if (c && in_bottom(s, *c)) {
        res.fixed_point = *c;
        res.exact = true;
      } else {
        res.fixed_point = y;
      }
      break;
    }
    x = std::move(y);
  }

  for (const auto& z : res.bottom_checked)
    if (T(z) == z) ++res.fixed_points_in_bottom;
  if (res.fixed_point && res.exact &&
      std::find(res.bottom_checked.begin(), res.bottom_checked.end(), *res.fixed_point) ==
          res.bottom_checked.end())
    ++res.fixed_points_in_bottom;
  res.unique_in_bottom = res.fixed_points_in_bottom == 1;
  return res;
}

// Constant maps and exhaustive enumeration ----------------------------------------

struct ConstantMapBottomReport {
  std::vector<Point> points;  // z whose constant map satisfies the max condition
  bool equals_bottom = false;
};

/// {z : T_z satisfies the max condition for every alpha in the grid}. For a
/// constant map the left side p(z, z) does not depend on alpha and the right
/// side is nondecreasing in alpha, so the smallest grid value decides.
inline ConstantMapBottomReport constant_map_bottom(const FinitePMSpace& s,
                                                   std::span<const Rational> alphas) {
  if (alphas.empty()) throw ArgumentError("alpha grid is empty");
  for (const auto& a : alphas) Condition::max_condition(a).validate();
  ConstantMapBottomReport rep;
  const auto pairs = default_pairs(s);
  for (const auto& z : s.points()) {
    const MapSpec Tz = MapSpec::constant(z);
    bool ok = std::all_of(alphas.begin(), alphas.end(), [&](const Rational& a) {
      return check_condition_max(s, Tz, a, pairs).holds;
    });
    if (ok) rep.points.push_back(z);
  }
  rep.equals_bottom = rep.points == bottom_set(s);
  return rep;
}

inline constexpr std::size_t kMaxEnumerationSize = 5;

/// Self-map of a finite space as an index table.
struct MapTable {
  std::vector<std::size_t> image;
  MapSpec to_map(const FinitePMSpace& s) const { return MapSpec::from_indices(s, image); }
  bool is_constant() const {
    return std::all_of(image.begin(), image.end(), [&](std::size_t v) { return v == image[0]; });
  }
  friend bool operator==(const MapTable&, const MapTable&) = default;
};

inline MapTable compose(const MapTable& a, const MapTable& b) {  // a after b
  MapTable out;
  for (auto v : b.image) out.image.push_back(a.image[v]);
  return out;
}

/// Every self-map satisfying all of `conditions` on all pairs, in
/// lexicographic order of tables (first point most significant).
inline std::vector<MapTable> exhaustive_condition_maps(const FinitePMSpace& s,
                                                       std::span<const Condition> conditions) {
  const std::size_t n = s.size();
  if (n > kMaxEnumerationSize)
    throw SizeRefusal("exhaustive enumeration is limited to " +
                      std::to_string(kMaxEnumerationSize) + " points, space has " +
                      std::to_string(n));
  for (const auto& c : conditions) c.validate();
  const auto pairs = default_pairs(s);
  std::vector<MapTable> out;
  MapTable t{std::vector<std::size_t>(n, 0)};
  while (true) {
    const MapSpec T = t.to_map(s);
    bool ok = std::all_of(conditions.begin(), conditions.end(), [&](const Condition& c) {
      return check_condition(s, T, c, pairs, true).holds;
    });
    if (ok) out.push_back(t);
    std::size_t pos = n;
    while (pos > 0 && ++t.image[pos - 1] == n) t.image[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace pmkit
