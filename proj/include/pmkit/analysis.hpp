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
#include <string>
#include <vector>

#include "pmkit/core.hpp"
#include "pmkit/errors.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/sequence.hpp"
#include "pmkit/space.hpp"

namespace pmkit {

/// Analyzer settings. The defaults resolve every Theta(1/n) gap in the
/// catalog.
struct Tolerance {
  Rational tol = Rational(1, 1000000);
  std::size_t horizon = 10000;
};

enum class ConvergenceMode { converges, properly_converges, inconclusive, refuted };

inline const char* mode_name(ConvergenceMode m) {
  switch (m) {
    case ConvergenceMode::converges: return "converges";
    case ConvergenceMode::properly_converges: return "properly_converges";
    case ConvergenceMode::inconclusive: return "inconclusive";
    case ConvergenceMode::refuted: return "refuted";
  }
  return "?";
}

enum class GapKind { distance, self_distance, induced };

inline const char* gap_kind_name(GapKind k) {
  switch (k) {
    case GapKind::distance: return "distance";
    case GapKind::self_distance: return "self_distance";
    case GapKind::induced: return "induced";
  }
  return "?";
}

struct GapWitness {
  GapKind kind = GapKind::distance;
  std::size_t index = 0;
  Rational gap;
};

/// Finite certificate for a convergence claim. `converges` means every gap
/// from `tail_start` up to `horizon` is <= tol; `exact` marks verdicts
/// decided on an eventually periodic sequence, where the horizon is the
/// determining prefix and the verdict covers the whole infinite sequence.
struct ConvergenceReport {
  ConvergenceMode mode = ConvergenceMode::inconclusive;
  Point target;
  std::size_t tail_start = 0;
  Rational achieved_gap;
  Rational tol;
  std::size_t horizon = 0;
  bool exact = false;
  std::optional<GapWitness> witness;

  bool certified() const {
    return mode == ConvergenceMode::converges || mode == ConvergenceMode::properly_converges;
  }
};

enum class CauchyVerdict { cauchy, inconclusive, refuted };

inline const char* cauchy_name(CauchyVerdict v) {
  switch (v) {
    case CauchyVerdict::cauchy: return "cauchy";
    case CauchyVerdict::inconclusive: return "inconclusive";
    case CauchyVerdict::refuted: return "refuted";
  }
  return "?";
}

/// Two index pairs whose values are accumulation values of p(x_n, x_m)
/// more than 2*tol apart.
struct Oscillation {
  std::size_t low_n = 0, low_m = 0;
  Rational low;
  std::size_t high_n = 0, high_m = 0;
  Rational high;
};

struct CauchyReport {
  CauchyVerdict verdict = CauchyVerdict::inconclusive;
  std::optional<Rational> limit;  // the a of an a-Cauchy sequence
  std::size_t tail_start = 0;
  Rational spread;
  Rational tol;
  std::size_t horizon = 0;
  bool exact = false;
  std::optional<Oscillation> witness;
};

namespace detail {

inline void check_tolerance(const Tolerance& t) {
  if (t.tol.sign() < 0) throw ArgumentError("tolerance must be >= 0, got " + t.tol.to_string());
  if (t.horizon == 0) throw ArgumentError("horizon must be >= 1");
}

// First index of the final quarter of 1..n.
inline std::size_t final_quarter_start(std::size_t n) { return n - (n + 3) / 4 + 1; }

enum class TailStatus { certified, refuted, inconclusive };

struct TailResult {
  TailStatus status = TailStatus::inconclusive;
  std::size_t tail_start = 0;
  Rational achieved;
  std::size_t horizon = 0;
  bool exact = false;
  std::size_t witness_index = 0;
  Rational witness_gap;
};

// Certifies gap(n) -> 0 for a nonnegative gap sequence.
template <class Gap>
TailResult tail_certificate(const SequenceSpec& seq, Gap&& gap, const Tolerance& t) {
  TailResult r;
  if (const auto& per = seq.periodicity()) {
    seq.verify_period(t.horizon);
    const std::size_t last = seq.determining_prefix();
    std::vector<Rational> g;
    g.reserve(last);
    for (std::size_t n = 1; n <= last; ++n) g.push_back(gap(n));
    r.exact = true;
    r.horizon = last;
    // A gap on the cycle recurs forever.
    std::size_t worst = per->offset;
    for (std::size_t n = per->offset; n <= last; ++n)
      if (g[n - 1] > g[worst - 1]) worst = n;
    if (g[worst - 1] > t.tol) {
      r.status = TailStatus::refuted;
      r.witness_index = worst;
      r.witness_gap = g[worst - 1];
      return r;
    }
    std::size_t start = last + 1;
    while (start > 1 && g[start - 2] <= t.tol) --start;
    r.status = TailStatus::certified;
    r.tail_start = start;
    r.achieved = g[worst - 1];
    for (std::size_t n = start; n <= last; ++n) r.achieved = std::max(r.achieved, g[n - 1]);
    return r;
  }

  const std::size_t N = t.horizon;
  std::vector<Rational> g;
  g.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) g.push_back(gap(n));
  r.horizon = N;
  std::size_t start = N + 1;
  Rational achieved(0);
  while (start > 1 && g[start - 2] <= t.tol) {
    --start;
    achieved = std::max(achieved, g[start - 1]);
  }
  const std::size_t q = final_quarter_start(N);
  r.tail_start = start;
  if (start <= q) {
    r.status = TailStatus::certified;
    r.achieved = achieved;
    return r;
  }
  // A declared exact tail refutes only a gap that stays constant over the
  // final quarter; a shrinking gap (1/n, 1 + 1/n) cannot be told apart from
  // a slow limit at a finite horizon.
  if (seq.exact_tail()) {
    bool constant = true;
    for (std::size_t n = q + 1; n <= N && constant; ++n) constant = g[n - 1] == g[q - 1];
    if (constant && g[q - 1] > t.tol) {
      r.status = TailStatus::refuted;
      r.witness_index = N;
      r.witness_gap = g[N - 1];
      return r;
    }
  }
  r.status = TailStatus::inconclusive;
  r.witness_index = N;
  r.witness_gap = g[N - 1];
  return r;
}

template <class Space>
void require_member(const Space& s, const Point& x) {
  if (!s.contains(x)) throw DomainError("target '" + to_string(x) + "' is not in the space");
}

inline ConvergenceReport make_report(const TailResult& tr, GapKind kind, const Point& target,
                                     const Tolerance& t) {
  ConvergenceReport rep;
  rep.target = target;
  rep.tol = t.tol;
  rep.horizon = tr.horizon;
  rep.exact = tr.exact;
  rep.tail_start = tr.tail_start;
  switch (tr.status) {
    case TailStatus::certified:
      rep.mode = ConvergenceMode::converges;
      rep.achieved_gap = tr.achieved;
      break;
    case TailStatus::refuted:
      rep.mode = ConvergenceMode::refuted;
      rep.witness = GapWitness{kind, tr.witness_index, tr.witness_gap};
      rep.achieved_gap = tr.witness_gap;
      break;
    case TailStatus::inconclusive:
      rep.mode = ConvergenceMode::inconclusive;
      rep.witness = GapWitness{kind, tr.witness_index, tr.witness_gap};
      rep.achieved_gap = tr.witness_gap;
      break;
  }
  return rep;
}

// Shared a-Cauchy analysis for any pair function v(n, m).
template <class PairValue>
CauchyReport cauchy_core(const SequenceSpec& seq, PairValue&& value, const Tolerance& t) {
  CauchyReport rep;
  rep.tol = t.tol;
  std::size_t lo_idx, hi_idx;
  if (const auto& per = seq.periodicity()) {
    seq.verify_period(t.horizon);
    lo_idx = per->offset;
    hi_idx = seq.determining_prefix();
    rep.exact = true;
  } else {
    hi_idx = t.horizon;
    // At most 512 trailing indices keep the pair scan quadratic in a constant.
    lo_idx = std::max(final_quarter_start(t.horizon), t.horizon > 511 ? t.horizon - 511 : 1);
  }
  rep.horizon = hi_idx;
  rep.tail_start = lo_idx;

  std::vector<Point> xs;
  for (std::size_t n = lo_idx; n <= hi_idx; ++n) xs.push_back(seq.at(n));
  bool first = true;
  Oscillation osc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      Rational v = value(xs[i], xs[j]);
      if (first || v < osc.low) osc.low = v, osc.low_n = lo_idx + i, osc.low_m = lo_idx + j;
      if (first || v > osc.high) osc.high = v, osc.high_n = lo_idx + i, osc.high_m = lo_idx + j;
      first = false;
    }
  }
  rep.spread = osc.high - osc.low;
  if (rep.spread <= Rational(2) * t.tol) {
    rep.verdict = CauchyVerdict::cauchy;
    rep.limit = rep.spread.sign() == 0 ? osc.low : simplest_between(osc.high - t.tol, osc.low + t.tol);
    return rep;
  }
  rep.witness = osc;
  rep.verdict = rep.exact ? CauchyVerdict::refuted : CauchyVerdict::inconclusive;
  return rep;
}

}  // namespace detail

/// Convergence in the partial metric: p(x_n, x) -> p(x, x).
template <PartialMetricSpace S>
ConvergenceReport converges_to(const S& s, const SequenceSpec& seq, const Point& x,
                               const Tolerance& t = {}) {
  detail::check_tolerance(t);
  detail::require_member(s, x);
  const Rational pxx = s.distance(x, x);
  auto tr = detail::tail_certificate(
      seq, [&](std::size_t n) { return abs(s.distance(seq.at(n), x) - pxx); }, t);
  return detail::make_report(tr, GapKind::distance, x, t);
}

/// Convergence plus p(x_n, x_n) -> p(x, x).
template <PartialMetricSpace S>
ConvergenceReport properly_converges(const S& s, const SequenceSpec& seq, const Point& x,
                                     const Tolerance& t = {}) {
  ConvergenceReport plain = converges_to(s, seq, x, t);
  const Rational pxx = s.distance(x, x);
  auto tr = detail::tail_certificate(
      seq,
      [&](std::size_t n) {
        const Point xn = seq.at(n);
        return abs(s.distance(xn, xn) - pxx);
      },
      t);
  ConvergenceReport self = detail::make_report(tr, GapKind::self_distance, x, t);

  if (plain.mode == ConvergenceMode::refuted) return plain;
  if (self.mode == ConvergenceMode::refuted) return self;
  if (plain.mode == ConvergenceMode::inconclusive) return plain;
  if (self.mode == ConvergenceMode::inconclusive) return self;
  ConvergenceReport out = plain;
  out.mode = ConvergenceMode::properly_converges;
  out.tail_start = std::max(plain.tail_start, self.tail_start);
  out.achieved_gap = std::max(plain.achieved_gap, self.achieved_gap);
  out.horizon = std::max(plain.horizon, self.horizon);
  return out;
}

/// Convergence in the induced metric: p_m(x_n, x) -> 0.
template <PartialMetricSpace S>
ConvergenceReport converges_in_induced_metric(const S& s, const SequenceSpec& seq, const Point& x,
                                              const Tolerance& t = {}) {
  detail::check_tolerance(t);
  detail::require_member(s, x);
  auto tr = detail::tail_certificate(
      seq, [&](std::size_t n) { return p_m(s, seq.at(n), x); }, t);
  return detail::make_report(tr, GapKind::induced, x, t);
}

/// lim_{n,m} p(x_n, x_m) exists (within tol); the limit is reported as the
/// simplest rational consistent with every observed tail value.
template <PartialMetricSpace S>
CauchyReport is_cauchy(const S& s, const SequenceSpec& seq, const Tolerance& t = {}) {
  detail::check_tolerance(t);
  return detail::cauchy_core(
      seq, [&](const Point& a, const Point& b) { return s.distance(a, b); }, t);
}

/// Cauchy test in the induced metric p_m.
template <PartialMetricSpace S>
CauchyReport is_cauchy_induced(const S& s, const SequenceSpec& seq, const Tolerance& t = {}) {
  detail::check_tolerance(t);
  return detail::cauchy_core(
      seq, [&](const Point& a, const Point& b) { return p_m(s, a, b); }, t);
}

}  // namespace pmkit
