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
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmkit/analysis.hpp"
#include "pmkit/core.hpp"
#include "pmkit/errors.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/sequence.hpp"
#include "pmkit/space.hpp"

namespace pmkit {

// Limits of eventually periodic sequences -------------------------------------

namespace detail {

inline std::vector<Point> cycle_values(const SequenceSpec& seq) {
  const auto& per = seq.periodicity();
  if (!per)
    throw UnsupportedInput("sequence '" + seq.name() +
                           "' is not eventually periodic; exact limits need a period");
  seq.verify_period(seq.default_horizon());
  std::vector<Point> out;
  for (std::size_t n = per->offset; n <= seq.determining_prefix(); ++n) out.push_back(seq.at(n));
  return out;
}

}  // namespace detail

/// Every x with lim p(x_n, x) = p(x, x) exactly. For an eventually periodic
/// sequence the limit exists iff p(c, x) = p(x, x) for every value c on the
/// cycle.
inline std::vector<Point> limit_set(const FinitePMSpace& s, const SequenceSpec& seq) {
  std::vector<std::size_t> cycle;
  for (const auto& c : detail::cycle_values(seq)) cycle.push_back(s.require_index(c));
  std::vector<Point> out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool ok = std::all_of(cycle.begin(), cycle.end(),
                          [&](std::size_t c) { return s.at(c, x) == s.at(x, x); });
    if (ok) out.push_back(s.point(x));
  }
  return out;
}

// Specialization order ---------------------------------------------------------

/// Boolean relation over the points of a finite space, row-major.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * n_ + j] = v ? 1 : 0; }

  bool reflexive() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!(*this)(i, i)) return false;
    return true;
  }
  bool antisymmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && (*this)(i, j) && (*this)(j, i)) return false;
    return true;
  }
  bool transitive() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if ((*this)(i, j))
          for (std::size_t k = 0; k < n_; ++k)
            if ((*this)(j, k) && !(*this)(i, k)) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

inline void require_axioms(const FinitePMSpace& s, const char* what) {
  auto rep = check_axioms(s);
  if (!rep.pass)
    throw ArgumentError(std::string(what) + " needs a partial metric space; axiom " +
                        axiom_name(*rep.violated) + " fails");
}

/// x >= y  <=>  y lies in every ball around x  <=>  p(x, y) = p(x, x).
inline Relation specialization_order(const FinitePMSpace& s) {
  require_axioms(s, "specialization_order");
  Relation r(s.size());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) r.set(x, y, s.at(x, y) == s.at(x, x));
  if (!r.reflexive() || !r.antisymmetric() || !r.transitive())
    throw InvariantViolation("specialization order is not a partial order");
  return r;
}

struct MaximalPointsReport {
  std::vector<std::size_t> indices;
  std::vector<Point> maximal;
  bool cover_verified = false;
  std::size_t radii_checked = 0;
};

/// Points with nothing strictly above them in the specialization order,
/// plus a check that balls of every candidate radius around them cover the
/// space.
inline MaximalPointsReport maximal_points(const FinitePMSpace& s) {
  const Relation order = specialization_order(s);
  MaximalPointsReport rep;
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool dominated = false;
    for (std::size_t y = 0; y < s.size() && !dominated; ++y)
      dominated = y != x && order(y, x);
    if (!dominated) {
      rep.indices.push_back(x);
      rep.maximal.push_back(s.point(x));
    }
  }
  rep.cover_verified = true;
  for (const auto& eps : all_candidate_radii(s)) {
    ++rep.radii_checked;
    std::vector<char> covered(s.size(), 0);
    for (auto c : rep.indices)
      for (auto j : ball_indices(s, c, eps)) covered[j] = 1;
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
      rep.cover_verified = false;
      break;
    }
  }
  return rep;
}

// Diagonal as an intersection of D_n ------------------------------------------

struct GdeltaReport {
  bool t1 = false;
  std::size_t stabilization_n = 1;
  bool equals_diagonal = false;
  std::optional<Rational> min_gap;
  std::vector<std::pair<Point, Point>> off_diagonal;  // pairs surviving every D_n
};

/// D_n = union over x of B(x, 1/n) x B(x, 1/n). Membership of z in B(x, 1/n)
/// is decided by p(x, z) - p(x, x) < 1/n, so D_n can only change at
/// n = ceil(1/gap) for a positive gap; below the smallest gap g nothing
/// changes and the intersection over all n equals D_{ceil(1/g)}.
inline GdeltaReport gdelta_diagonal(const FinitePMSpace& s) {
  const std::size_t n = s.size();
  GdeltaReport rep;
  rep.t1 = separation_class(s).t1;

  std::set<Rational> gaps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      Rational g = s.at(x, z) - s.at(x, x);
      if (g.sign() > 0) gaps.insert(g);
    }

  std::set<std::size_t> critical = {1};
  if (!gaps.empty()) {
    rep.min_gap = *gaps.begin();
    BigInt n0 = (Rational(1) / *rep.min_gap).ceil();
    if (n0 > BigInt(std::numeric_limits<std::size_t>::max() / 2))
      throw UnsupportedInput("gaps too small to enumerate D_n");
    rep.stabilization_n = static_cast<std::size_t>(n0);
    for (const auto& g : gaps) {
      BigInt c = (Rational(1) / g).ceil();
      if (c <= n0) critical.insert(static_cast<std::size_t>(c));
    }
  }

  std::vector<char> inter(n * n, 1);
  for (std::size_t k : critical) {
    const Rational eps(BigInt(1), BigInt(k));
    std::vector<char> dn(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      auto b = ball_indices(s, x, eps);
      for (auto y : b)
        for (auto z : b) dn[y * n + z] = 1;
    }
    for (std::size_t i = 0; i < n * n; ++i) inter[i] = inter[i] && dn[i];
  }
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      if (y != z && inter[y * n + z]) rep.off_diagonal.emplace_back(s.point(y), s.point(z));
  rep.equals_diagonal = rep.off_diagonal.empty();
  return rep;
}

// Covers and nets ------------------------------------------------------------

struct CoverReport {
  bool covers = false;
  std::optional<Point> uncovered;
};

inline CoverReport ball_cover_check(const FinitePMSpace& s, const std::vector<Point>& centers,
                                    const Rational& eps) {
  require_positive_radius(eps);
  std::vector<char> covered(s.size(), 0);
  for (const auto& c : centers)
    for (auto j : ball_indices(s, s.require_index(c), eps)) covered[j] = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!covered[i]) return {false, s.point(i)};
  return {true, std::nullopt};
}

struct NetReport {
  std::vector<Point> net;
  std::size_t size() const { return net.size(); }
};

/// Greedy eps-net: repeatedly take the uncovered point whose ball covers the
/// most uncovered points (earliest on ties).
inline NetReport totally_bounded_at(const FinitePMSpace& s, const Rational& eps) {
  require_positive_radius(eps);
  const std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> balls(n);
  for (std::size_t c = 0; c < n; ++c) balls[c] = ball_indices(s, c, eps);
  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  NetReport rep;
  while (remaining > 0) {
    std::size_t best = n, best_gain = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (covered[c]) continue;
      std::size_t gain = 0;
      for (auto j : balls[c]) gain += covered[j] ? 0 : 1;
      if (gain > best_gain) best = c, best_gain = gain;
    }
    rep.net.push_back(s.point(best));
    for (auto j : balls[best]) {
      if (!covered[j]) --remaining;
      covered[j] = 1;
    }
  }
  return rep;
}

// Sequential compactness witness ----------------------------------------------

struct SubsequenceWitness {
  enum class Kind { whole_sequence, constant_subsequence };
  Kind kind = Kind::constant_subsequence;
  std::vector<std::size_t> indices;  // 1-based, up to the horizon
  Point limit;
  bool exact = false;
};

/// A convergent subsequence and its limit. Periodic sequences are decided
/// exactly (whole sequence if its limit set is nonempty, otherwise the most
/// frequent cycle value as a constant subsequence). Generators fall back to
/// a finite certificate for the whole sequence, then to pigeonhole over the
/// horizon.
inline SubsequenceWitness seq_compact_witness(const FinitePMSpace& s, const SequenceSpec& seq,
                                              const Tolerance& t = {}) {
  detail::check_tolerance(t);
  SubsequenceWitness w;
  const std::size_t horizon = seq.periodicity() ? std::max(t.horizon, seq.determining_prefix())
                                                : t.horizon;
  auto all_indices = [&] {
    std::vector<std::size_t> idx(horizon);
    for (std::size_t i = 0; i < horizon; ++i) idx[i] = i + 1;
    return idx;
  };

  std::vector<Point> candidates;
  if (seq.periodicity()) {
    auto ls = limit_set(s, seq);
    if (!ls.empty()) {
      w.kind = SubsequenceWitness::Kind::whole_sequence;
      w.limit = ls.front();
      w.indices = all_indices();
      w.exact = true;
      return w;
    }
    candidates = detail::cycle_values(seq);
    w.exact = true;
  } else {
    for (const auto& x : s.points()) {
      if (converges_to(s, seq, x, t).certified()) {
        w.kind = SubsequenceWitness::Kind::whole_sequence;
        w.limit = x;
        w.indices = all_indices();
        return w;
      }
    }
    for (std::size_t n = 1; n <= horizon; ++n) candidates.push_back(seq.at(n));
  }

  std::map<Point, std::size_t> count;
  for (const auto& c : candidates) ++count[c];
  const Point* best = &candidates.front();
  for (const auto& c : candidates)
    if (count[c] > count[*best]) best = &c;
  w.kind = SubsequenceWitness::Kind::constant_subsequence;
  w.limit = *best;
  for (std::size_t n = 1; n <= horizon; ++n)
    if (seq.at(n) == w.limit) w.indices.push_back(n);
  return w;
}

}  // namespace pmkit
