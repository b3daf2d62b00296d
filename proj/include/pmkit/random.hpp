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
#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pmkit/errors.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/space.hpp"

namespace pmkit {

struct RandomSpaceOptions {
  // Force f = 0, so the result is the metric space (X, d/2).
  bool metric = false;
};

namespace detail {

inline Rational random_rational(std::mt19937_64& rng, long long num_lo, long long num_hi,
                                long long den_hi) {
  std::uniform_int_distribution<long long> num(num_lo, num_hi);
  std::uniform_int_distribution<long long> den(1, den_hi);
  long long a = num(rng);
  return Rational(a, den(rng));
}

}  // namespace detail

/// Random n-point partial metric space p(x, y) = (d(x, y) + f(x) + f(y)) / 2.
///
/// d is the shortest-path closure of a complete graph with random positive
/// rational weights, so it is a metric. f is a nonnegative 1-Lipschitz
/// function: a constant plus the minimum over one to three random anchors of
/// (distance to the anchor + a per-anchor offset). One space in eight has
/// f = 0. Points are tags v0..v{n-1}; the output is a pure function of
/// (seed, n, options).
inline FinitePMSpace random_pm_space(std::uint64_t seed, std::size_t n,
                                     RandomSpaceOptions opts = {}) {
  if (n == 0) throw ArgumentError("random_pm_space needs n >= 1");
  std::mt19937_64 rng(seed);

  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = detail::random_rational(rng, 1, 12, 4);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];

  std::vector<Rational> f(n, Rational(0));
  const bool zero_f = opts.metric || std::uniform_int_distribution<int>(0, 7)(rng) == 0;
  if (!zero_f) {
    const std::size_t anchors = 1 + std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(n, 3) - 1)(rng);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Rational> offset(anchors);
    for (auto& o : offset) o = detail::random_rational(rng, 0, 6, 3);
    const Rational base = detail::random_rational(rng, 0, 4, 2);
    for (std::size_t x = 0; x < n; ++x) {
      Rational best = d[x][idx[0]] + offset[0];
      for (std::size_t a = 1; a < anchors; ++a) best = std::min(best, d[x][idx[a]] + offset[a]);
      f[x] = base + best;
    }
  }

  std::vector<Point> pts;
  std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(Tag{"v" + std::to_string(i)});
    for (std::size_t j = 0; j < n; ++j) p[i][j] = (d[i][j] + f[i] + f[j]) / Rational(2);
  }
  return FinitePMSpace(std::move(pts), std::move(p));
}

}  // namespace pmkit
