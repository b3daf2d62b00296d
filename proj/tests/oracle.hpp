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

// Brute-force reference implementations used as test oracles. Written
// straight from the definitions; none of them calls into the library's
// algorithms, only its Rational type and the raw distance table.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "pmkit/rational.hpp"
#include "pmkit/space.hpp"

namespace oracle {

using pmkit::Rational;
using Table = std::vector<std::vector<Rational>>;

inline Table table_of(const pmkit::FinitePMSpace& s) {
  Table t(s.size(), std::vector<Rational>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) t[i][j] = s.at(i, j);
  return t;
}

struct AxiomFlags {
  bool p1 = true, p2 = true, p3 = true, p4 = true;
  bool all() const { return p1 && p2 && p3 && p4; }
};

inline AxiomFlags axioms(const Table& p) {
  AxiomFlags f;
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool eq = p[x][x] == p[x][y] && p[x][y] == p[y][y];
      if (x != y && eq) f.p1 = false;
      if (p[x][x] > p[y][x]) f.p2 = false;
      if (p[x][y] != p[y][x]) f.p3 = false;
      for (std::size_t z = 0; z < n; ++z)
        if (p[x][y] > p[x][z] + p[z][y] - p[z][z]) f.p4 = false;
    }
  return f;
}

// Smallest ball around x: {z : p(x,z) = p(x,x)}. Balls shrink with the
// radius and p(x,z) >= p(x,x), so every small enough ball equals it.
inline std::vector<char> minimal_ball(const Table& p, std::size_t x) {
  std::vector<char> b(p.size(), 0);
  for (std::size_t z = 0; z < p.size(); ++z) b[z] = p[x][z] == p[x][x];
  return b;
}

inline bool hausdorff(const Table& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      auto bx = minimal_ball(p, x), by = minimal_ball(p, y);
      for (std::size_t z = 0; z < p.size(); ++z)
        if (bx[z] && by[z]) return false;
    }
  return true;
}

inline bool t1(const Table& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (x != y && minimal_ball(p, x)[y]) return false;
  return true;
}

// D_n membership of (y, z) computed from the definition for n = 1..max_n;
// returns the pairs with y != z surviving every D_n.
inline std::set<std::pair<std::size_t, std::size_t>> surviving_pairs(const Table& p,
                                                                     std::size_t max_n) {
  const std::size_t n = p.size();
  std::set<std::pair<std::size_t, std::size_t>> alive;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      if (y != z) alive.insert({y, z});
  for (std::size_t k = 1; k <= max_n; ++k) {
    const Rational r(1, static_cast<long long>(k));
    std::set<std::pair<std::size_t, std::size_t>> next;
    for (auto [y, z] : alive)
      for (std::size_t x = 0; x < n; ++x)
        if (p[x][y] < p[x][x] + r && p[x][z] < p[x][x] + r) {
          next.insert({y, z});
          break;
        }
    alive = std::move(next);
  }
  return alive;
}

// Simplest fraction in [lo, hi] by trying denominators in order.
inline Rational simplest_by_search(const Rational& lo, const Rational& hi) {
  for (long long den = 1;; ++den) {
    std::optional<Rational> best;
    const pmkit::BigInt a = (lo * Rational(den)).ceil();
    const pmkit::BigInt b = (hi * Rational(den)).floor();
    for (pmkit::BigInt num = a; num <= b; ++num) {
      Rational c(num, pmkit::BigInt(den));
      if (!best || abs(c) < abs(*best)) best = c;
    }
    if (best) return *best;
  }
}

// Size of a smallest set of centers whose eps-balls cover the space.
inline std::size_t min_cover_size(const Table& p, const Rational& eps) {
  const std::size_t n = p.size();
  std::size_t best = n;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (k >= best) continue;
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) {
      bool hit = false;
      for (std::size_t c = 0; c < n && !hit; ++c)
        hit = ((mask >> c) & 1) && p[c][y] < p[c][c] + eps;
      ok = hit;
    }
    if (ok) best = k;
  }
  return best;
}

}  // namespace oracle
