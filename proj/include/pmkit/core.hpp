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
#include <set>
#include <string>
#include <vector>

#include "pmkit/errors.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/space.hpp"

namespace pmkit {

enum class Axiom { P1, P2, P3, P4 };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::P1: return "P1";
    case Axiom::P2: return "P2";
    case Axiom::P3: return "P3";
    case Axiom::P4: return "P4";
  }
  return "?";
}

/// Outcome of check_axioms. On failure `indices`/`witness` name the
/// offending points and `values` the matrix entries involved, in the order
///   P1: p(x,x), p(x,y), p(y,y)        (x != y but all three coincide)
///   P2: p(x,x), p(y,x)                (p(x,x) > p(y,x))
///   P3: p(x,y), p(y,x)                (asymmetric)
///   P4: p(x,y), p(x,z), p(z,y), p(z,z) (triangle fails)
struct AxiomReport {
  bool pass = true;
  std::optional<Axiom> violated;
  std::vector<std::size_t> indices;
  std::vector<Point> witness;
  std::vector<Rational> values;
};

/// Checks P1..P4 in that order; each axiom is scanned lexicographically over
/// its index tuples and the first violation is reported.
inline AxiomReport check_axioms(const FinitePMSpace& s) {
  const std::size_t n = s.size();
  auto fail = [&](Axiom a, std::vector<std::size_t> idx, std::vector<Rational> vals) {
    AxiomReport r;
    r.pass = false;
    r.violated = a;
    for (auto i : idx) r.witness.push_back(s.point(i));
    r.indices = std::move(idx);
    r.values = std::move(vals);
    return r;
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && s.at(x, x) == s.at(x, y) && s.at(x, y) == s.at(y, y))
        return fail(Axiom::P1, {x, y}, {s.at(x, x), s.at(x, y), s.at(y, y)});

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.at(x, x) > s.at(y, x)) return fail(Axiom::P2, {x, y}, {s.at(x, x), s.at(y, x)});

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (s.at(x, y) != s.at(y, x)) return fail(Axiom::P3, {x, y}, {s.at(x, y), s.at(y, x)});

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (s.at(x, y) > s.at(x, z) + s.at(z, y) - s.at(z, z))
          return fail(Axiom::P4, {x, y, z}, {s.at(x, y), s.at(x, z), s.at(z, y), s.at(z, z)});

  return {};
}

/// Re-evaluates a failing report's witness against the space.
inline bool witness_reproduces(const FinitePMSpace& s, const AxiomReport& r) {
  if (r.pass || !r.violated) return false;
  const auto& i = r.indices;
  switch (*r.violated) {
    case Axiom::P1:
      return i.size() == 2 && i[0] != i[1] && s.at(i[0], i[0]) == s.at(i[0], i[1]) &&
             s.at(i[0], i[1]) == s.at(i[1], i[1]);
    case Axiom::P2:
      return i.size() == 2 && s.at(i[0], i[0]) > s.at(i[1], i[0]);
    case Axiom::P3:
      return i.size() == 2 && s.at(i[0], i[1]) != s.at(i[1], i[0]);
    case Axiom::P4:
      return i.size() == 3 &&
             s.at(i[0], i[1]) > s.at(i[0], i[2]) + s.at(i[2], i[1]) - s.at(i[2], i[2]);
  }
  return false;
}

// Derived metrics -------------------------------------------------------------

/// Induced metric 2p(x,y) - p(x,x) - p(y,y).
template <PartialMetricSpace S>
Rational p_m(const S& s, const Point& x, const Point& y) {
  return Rational(2) * s.distance(x, y) - s.distance(x, x) - s.distance(y, y);
}

/// p off the diagonal, 0 on it.
template <PartialMetricSpace S>
Rational d_metric(const S& s, const Point& x, const Point& y) {
  if (!s.contains(x)) throw DomainError("'" + to_string(x) + "' is not in the space");
  if (!s.contains(y)) throw DomainError("'" + to_string(y) + "' is not in the space");
  if (x == y) return Rational(0);
  return s.distance(x, y);
}

/// p shifted down by the infimum of self-distances.
template <PartialMetricSpace S>
Rational p_bar(const S& s, const Point& x, const Point& y) {
  return s.distance(x, y) - reference_rho(s);
}

struct RhoResult {
  Rational value;
  bool attained = true;
};

inline RhoResult rho_p(const FinitePMSpace& s) { return {reference_rho(s), true}; }

inline std::vector<Point> bottom_set(const FinitePMSpace& s) {
  const Rational rho = reference_rho(s);
  std::vector<Point> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.at(i, i) == rho) out.push_back(s.point(i));
  return out;
}

inline Rational diameter(const FinitePMSpace& s) {
  Rational best = s.at(0, 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.at(i, j) > best) best = s.at(i, j);
  return best;
}

// Balls -----------------------------------------------------------------------

inline void require_positive_radius(const Rational& eps) {
  if (eps.sign() <= 0) throw ArgumentError("ball radius must be positive, got " + eps.to_string());
}

/// y in B(center, eps)  <=>  p(center, y) < p(center, center) + eps.
template <PartialMetricSpace S>
bool in_ball(const S& s, const Point& center, const Rational& eps, const Point& y) {
  require_positive_radius(eps);
  return s.distance(center, y) < s.distance(center, center) + eps;
}

/// Materialized ball as point indices, in space order.
inline std::vector<std::size_t> ball_indices(const FinitePMSpace& s, std::size_t center,
                                             const Rational& eps) {
  require_positive_radius(eps);
  std::vector<std::size_t> out;
  const Rational bound = s.at(center, center) + eps;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s.at(center, j) < bound) out.push_back(j);
  return out;
}

inline std::vector<Point> ball(const FinitePMSpace& s, const Point& center, const Rational& eps) {
  std::vector<Point> out;
  for (auto j : ball_indices(s, s.require_index(center), eps)) out.push_back(s.point(j));
  return out;
}

/// Radii at which the ball around `center` changes, plus one radius strictly
/// inside every gap between them: half the smallest positive threshold, each
/// threshold, midpoints of consecutive thresholds and one past the largest.
/// Every distinct ball around `center` is realized by some radius here.
inline std::vector<Rational> candidate_radii(const FinitePMSpace& s, std::size_t center) {
  std::set<Rational> gaps;
  for (std::size_t z = 0; z < s.size(); ++z) {
    Rational g = s.at(center, z) - s.at(center, center);
    if (g.sign() > 0) gaps.insert(g);
  }
  if (gaps.empty()) return {Rational(1)};
  std::vector<Rational> g(gaps.begin(), gaps.end());
  std::vector<Rational> out;
  out.push_back(g.front() / Rational(2));
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(g[i]);
    if (i + 1 < g.size()) out.push_back((g[i] + g[i + 1]) / Rational(2));
  }
  out.push_back(g.back() + Rational(1));
  return out;
}

/// Union of candidate radii over all centers.
inline std::vector<Rational> all_candidate_radii(const FinitePMSpace& s) {
  std::set<Rational> all;
  for (std::size_t c = 0; c < s.size(); ++c)
    for (auto& r : candidate_radii(s, c)) all.insert(r);
  return {all.begin(), all.end()};
}

// Separation ------------------------------------------------------------------

struct SeparationReport {
  bool t0 = true;
  bool t1 = true;
  bool hausdorff = true;
};

inline SeparationReport separation_class(const FinitePMSpace& s) {
  const std::size_t n = s.size();
  SeparationReport r;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const Rational& pxy = s.at(x, y);
      // Neither point has a ball missing the other exactly when every ball
      // around each contains the other.
      if (pxy == s.at(x, x) && s.at(y, x) == s.at(y, y)) r.t0 = false;
      if (!(pxy > s.at(x, x) && pxy > s.at(y, y))) r.t1 = false;
    }
  }

  std::vector<std::vector<std::vector<char>>> balls(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& eps : candidate_radii(s, c)) {
      std::vector<char> mask(n, 0);
      for (auto j : ball_indices(s, c, eps)) mask[j] = 1;
      balls[c].push_back(std::move(mask));
    }
  }
  auto disjoint = [n](const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] && b[i]) return false;
    return true;
  };
  for (std::size_t x = 0; x < n && r.hausdorff; ++x) {
    for (std::size_t y = x + 1; y < n && r.hausdorff; ++y) {
      bool separated = false;
      for (const auto& bx : balls[x]) {
        for (const auto& by : balls[y])
          if (disjoint(bx, by)) { separated = true; break; }
        if (separated) break;
      }
      if (!separated) r.hausdorff = false;
    }
  }
  return r;
}

}  // namespace pmkit
