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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmkit/errors.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"

namespace pmkit {

/// Anything that can answer "is x a point of this space" and "what is
/// p(x, y)". Both the explicit finite spaces and the formula-backed catalog
/// spaces model it, so the analyzers and condition checkers are written once.
template <class S>
concept PartialMetricSpace = requires(const S& s, const Point& x) {
  { s.contains(x) } -> std::same_as<bool>;
  { s.distance(x, x) } -> std::convertible_to<Rational>;
};

/// Explicit finite space: ordered point list plus the full distance matrix.
///
/// Construction validates shape only (square, matches point count, no
/// duplicate points, nonnegative entries). The partial-metric axioms are
/// not enforced here so that broken tables can be handed to check_axioms.
class FinitePMSpace {
 public:
  FinitePMSpace(std::vector<Point> points, std::vector<std::vector<Rational>> matrix)
      : points_(std::move(points)) {
    const std::size_t n = points_.size();
    if (n == 0) throw StructuralError("a partial metric space needs at least one point");
    if (matrix.size() != n)
      throw StructuralError("distance matrix has " + std::to_string(matrix.size()) +
                            " rows for " + std::to_string(n) + " points");
    matrix_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix[i].size() != n)
        throw StructuralError("row " + std::to_string(i) + " has " +
                              std::to_string(matrix[i].size()) + " entries, expected " +
                              std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) {
        if (matrix[i][j].sign() < 0)
          throw StructuralError("negative distance at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        matrix_.push_back(std::move(matrix[i][j]));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.emplace(points_[i], i).second)
        throw StructuralError("duplicate point '" + to_string(points_[i]) + "'");
    }
  }

  /// Tabulate a distance function over a point list.
  template <class F>
  static FinitePMSpace tabulate(std::vector<Point> points, F&& p) {
    std::vector<std::vector<Rational>> m(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      m[i].reserve(points.size());
      for (std::size_t j = 0; j < points.size(); ++j) m[i].push_back(p(points[i], points[j]));
    }
    return FinitePMSpace(std::move(points), std::move(m));
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_.at(i); }
  const Rational& at(std::size_t i, std::size_t j) const { return matrix_[i * size() + j]; }

  std::optional<std::size_t> index_of(const Point& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_index(const Point& x) const {
    auto i = index_of(x);
    if (!i) throw DomainError("point '" + to_string(x) + "' is not in the space");
    return *i;
  }

  bool contains(const Point& x) const { return index_.count(x) != 0; }
  const Rational& distance(const Point& x, const Point& y) const {
    return at(require_index(x), require_index(y));
  }

  /// Subspace on the given points, in the given order.
  FinitePMSpace restrict(const std::vector<Point>& subset) const {
    std::vector<std::size_t> idx;
    idx.reserve(subset.size());
    for (const auto& p : subset) idx.push_back(require_index(p));
    std::vector<std::vector<Rational>> m(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m[i].push_back(at(idx[i], idx[j]));
    return FinitePMSpace(subset, std::move(m));
  }

  friend bool operator==(const FinitePMSpace& a, const FinitePMSpace& b) {
    return a.points_ == b.points_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<Point> points_;
  std::vector<Rational> matrix_;  // row-major
  std::map<Point, std::size_t> index_;
};

/// Analytic description of a bottom set. Only the shapes that occur in the
/// catalog are supported.
struct DeclaredBottom {
  enum class Kind { empty, all, finite, interval, predicate };

  Kind kind = Kind::empty;
  std::vector<Point> members;  // finite
  Rational lo, hi;             // interval
  bool lo_open = false, hi_open = false;
  std::function<bool(const Point&)> test;  // predicate
  std::string label;                       // predicate

  static DeclaredBottom none() { return {}; }
  static DeclaredBottom everything() {
    DeclaredBottom b;
    b.kind = Kind::all;
    return b;
  }
  static DeclaredBottom finite(std::vector<Point> pts) {
    DeclaredBottom b;
    b.kind = Kind::finite;
    b.members = std::move(pts);
    return b;
  }
  static DeclaredBottom interval(Rational lo, bool lo_open, Rational hi, bool hi_open) {
    DeclaredBottom b;
    b.kind = Kind::interval;
    b.lo = std::move(lo);
    b.hi = std::move(hi);
    b.lo_open = lo_open;
    b.hi_open = hi_open;
    return b;
  }
  static DeclaredBottom where(std::string label, std::function<bool(const Point&)> test) {
    DeclaredBottom b;
    b.kind = Kind::predicate;
    b.label = std::move(label);
    b.test = std::move(test);
    return b;
  }

  bool is_empty() const { return kind == Kind::empty; }

  // Membership for points already known to be in the domain.
  bool admits(const Point& x) const {
    switch (kind) {
      case Kind::empty: return false;
      case Kind::all: return true;
      case Kind::finite:
        for (const auto& m : members)
          if (m == x) return true;
        return false;
      case Kind::interval: {
        auto* r = std::get_if<Rational>(&x);
        if (!r) return false;
        bool above = lo_open ? lo < *r : lo <= *r;
        bool below = hi_open ? *r < hi : *r <= hi;
        return above && below;
      }
      case Kind::predicate: return test(x);
    }
    return false;
  }

  std::string describe() const {
    switch (kind) {
      case Kind::empty: return "empty";
      case Kind::all: return "all";
      case Kind::finite: {
        std::string s = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (i) s += ", ";
          s += to_string(members[i]);
        }
        return s + "}";
      }
      case Kind::interval:
        return std::string(lo_open ? "(" : "[") + lo.to_string() + ", " + hi.to_string() +
               (hi_open ? ")" : "]");
      case Kind::predicate: return label;
    }
    return "?";
  }
};

/// A possibly infinite space given by formulas, with its infimum of
/// self-distances and bottom set declared analytically. Samples are checked
/// against the declarations, never used to derive them.
class CatalogSpace {
 public:
  using Evaluator = std::function<Rational(const Point&, const Point&)>;
  using Domain = std::function<bool(const Point&)>;
  using Sampler = std::function<std::vector<Point>(std::uint64_t seed, std::size_t count)>;

  struct Definition {
    std::string name;
    std::string description;
    Evaluator evaluator;
    Domain domain;
    std::optional<Rational> declared_rho;
    DeclaredBottom declared_bottom;
    Sampler sampler;
    std::vector<Point> canonical_sample;
  };

  explicit CatalogSpace(Definition def) : def_(std::move(def)) {
    for (const auto& p : def_.canonical_sample)
      if (!def_.domain(p))
        throw InvariantViolation(def_.name + ": canonical sample point '" + to_string(p) +
                                 "' outside the domain");
  }

  const std::string& name() const { return def_.name; }
  const std::string& description() const { return def_.description; }
  bool contains(const Point& x) const { return def_.domain(x); }

  Rational distance(const Point& x, const Point& y) const {
    if (!contains(x)) throw DomainError(name() + ": '" + to_string(x) + "' is not in the domain");
    if (!contains(y)) throw DomainError(name() + ": '" + to_string(y) + "' is not in the domain");
    return def_.evaluator(x, y);
  }

  const std::optional<Rational>& declared_rho() const { return def_.declared_rho; }
  const DeclaredBottom& declared_bottom() const { return def_.declared_bottom; }
  bool in_declared_bottom(const Point& x) const {
    return contains(x) && def_.declared_bottom.admits(x);
  }

  const std::vector<Point>& canonical_sample() const { return def_.canonical_sample; }
  std::vector<Point> sample(std::uint64_t seed, std::size_t count) const {
    return def_.sampler(seed, count);
  }

  FinitePMSpace materialize() const { return materialize(def_.canonical_sample); }
  FinitePMSpace materialize(std::vector<Point> pts) const {
    return FinitePMSpace::tabulate(std::move(pts),
                                   [this](const Point& x, const Point& y) { return distance(x, y); });
  }

  CatalogSpace with_sample(std::vector<Point> pts) const {
    Definition d = def_;
    d.canonical_sample = std::move(pts);
    return CatalogSpace(std::move(d));
  }

 private:
  Definition def_;
};

/// Reference infimum of self-distances: computed for finite spaces,
/// declared for catalog spaces.
inline Rational reference_rho(const FinitePMSpace& s) {
  Rational best = s.at(0, 0);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s.at(i, i) < best) best = s.at(i, i);
  return best;
}

inline Rational reference_rho(const CatalogSpace& s) {
  if (!s.declared_rho())
    throw MetadataError(s.name() + ": no declared infimum of self-distances");
  return *s.declared_rho();
}

inline bool in_bottom(const FinitePMSpace& s, const Point& x) {
  return s.distance(x, x) == reference_rho(s);
}

inline bool in_bottom(const CatalogSpace& s, const Point& x) { return s.in_declared_bottom(x); }

}  // namespace pmkit
