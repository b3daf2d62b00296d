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

#include "pmkit/topology.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pmkit/catalog.hpp"
#include "pmkit/random.hpp"

namespace pmkit {
namespace {

Point q(long long n, long long d = 1) { return Rational(n, d); }

FinitePMSpace metric_line(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Rational(static_cast<long long>(i)));
  return FinitePMSpace::tabulate(pts, [](const Point& x, const Point& y) {
    return abs(std::get<Rational>(x) - std::get<Rational>(y));
  });
}

// Limit test by unrolling: x is a limit iff the gap vanishes on several
// full periods past the prefix.
bool unrolled_limit(const FinitePMSpace& s, const SequenceSpec& seq, std::size_t x) {
  const auto per = *seq.periodicity();
  const std::size_t from = per.offset + 3 * per.period;
  for (std::size_t n = from; n < from + 4 * per.period; ++n)
    if (s.distance(seq.at(n), s.point(x)) != s.at(x, x)) return false;
  return true;
}

TEST(LimitSetTest, EverythingConvergesToZero) {
  auto fs = catalog_space("ex5.6").materialize();
  for (const auto& seq : {SequenceSpec::explicit_list({q(1, 2)}),
                          SequenceSpec::explicit_list({q(1, 2), q(1, 3), q(1, 4)}),
                          SequenceSpec::explicit_list({q(1, 4), q(0), q(1, 3)}, 2)}) {
    auto ls = limit_set(fs, seq);
    EXPECT_NE(std::find(ls.begin(), ls.end(), q(0)), ls.end());
  }
}

TEST(LimitSetTest, ConstantSequenceInMetricSpace) {
  auto m = metric_line(4);
  EXPECT_EQ(limit_set(m, SequenceSpec::explicit_list({q(2)})), std::vector<Point>{q(2)});
}

TEST(LimitSetTest, PeriodicSequenceOverMaxPlusOne) {
  // p(c, x) = 1 + max{c, x} equals p(x, x) = 1 + x for every cycle value c
  // exactly when x >= 1/2, so the sample points 1/2, 2/3, 3/4 are limits.
  auto fs = catalog_space("ex3.1").materialize();
  auto seq = SequenceSpec::explicit_list({q(1, 2), q(1, 3), q(1, 4)});
  EXPECT_EQ(limit_set(fs, seq), (std::vector<Point>{q(1, 2), q(2, 3), q(3, 4)}));
  for (std::size_t x = 0; x < fs.size(); ++x) {
    bool listed = std::get<Rational>(fs.point(x)) >= Rational(1, 2);
    EXPECT_EQ(unrolled_limit(fs, seq, x), listed);
  }
}

TEST(LimitSetTest, AgreesWithUnrolling) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = random_pm_space(seed, 5);
    std::vector<Point> terms{s.point(seed % 5), s.point((seed / 5) % 5), s.point((seed / 25) % 5)};
    auto seq = SequenceSpec::explicit_list(terms, 1 + seed % 3);
    auto ls = limit_set(s, seq);
    for (std::size_t x = 0; x < 5; ++x)
      EXPECT_EQ(std::find(ls.begin(), ls.end(), s.point(x)) != ls.end(), unrolled_limit(s, seq, x));
  }
}

TEST(LimitSetTest, NeedsPeriodicSequence) {
  auto fs = catalog_space("ex4.8").materialize();
  EXPECT_THROW(limit_set(fs, standard_catalog().sequence("natural", 10)), UnsupportedInput);
}

TEST(SpecializationOrderTest, ZeroIsAboveEverything) {
  auto fs = catalog_space("ex5.6").materialize();
  auto order = specialization_order(fs);
  const auto zero = fs.require_index(q(0));
  for (std::size_t y = 0; y < fs.size(); ++y) EXPECT_TRUE(order(zero, y));
}

TEST(SpecializationOrderTest, MetricOrderIsEquality) {
  auto m = metric_line(4);
  auto order = specialization_order(m);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) EXPECT_EQ(order(x, y), x == y);
}

TEST(SpecializationOrderTest, TwoPointsIncomparable) {
  auto fs = catalog_space("ex5.8").materialize();
  auto order = specialization_order(fs);
  EXPECT_FALSE(order(0, 1));
  EXPECT_FALSE(order(1, 0));
}

TEST(SpecializationOrderTest, MatchesEveryBallCriterion) {
  // x >= y iff y lies in B(x, eps) for every eps; balls only change below
  // the smallest positive gap, so half of it decides.
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto s = random_pm_space(seed, 5);
    auto order = specialization_order(s);
    for (std::size_t x = 0; x < 5; ++x) {
      Rational small(1);
      for (std::size_t z = 0; z < 5; ++z)
        if (s.at(x, z) > s.at(x, x)) small = std::min(small, (s.at(x, z) - s.at(x, x)) / Rational(2));
      for (std::size_t y = 0; y < 5; ++y)
        EXPECT_EQ(order(x, y), s.at(x, y) < s.at(x, x) + small);
    }
  }
}

TEST(SpecializationOrderTest, RefusesBrokenTables) {
  FinitePMSpace bad({tag("a"), tag("b")}, {{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
  EXPECT_THROW(specialization_order(bad), ArgumentError);
  EXPECT_THROW(maximal_points(bad), ArgumentError);
}

TEST(MaximalPointsTest, Cases) {
  auto s56 = catalog_space("ex5.6").materialize();
  auto r = maximal_points(s56);
  EXPECT_EQ(r.maximal, std::vector<Point>{q(0)});
  EXPECT_TRUE(r.cover_verified);
  EXPECT_EQ(ball(s56, q(0), Rational(1, 1000)).size(), s56.size());

  auto m = metric_line(3);
  EXPECT_EQ(maximal_points(m).maximal, m.points());

  auto apex = apex_space(4);
  auto ra = maximal_points(apex);
  EXPECT_EQ(ra.maximal, std::vector<Point>{tag("a")});
  EXPECT_EQ(ball(apex, tag("a"), Rational(1, 2)).size(), apex.size());
}

TEST(GdeltaTest, TwoPointSpace) {
  auto g = gdelta_diagonal(catalog_space("ex5.8").materialize());
  EXPECT_TRUE(g.t1);
  EXPECT_TRUE(g.equals_diagonal);
  EXPECT_EQ(g.stabilization_n, 1u);
}

TEST(GdeltaTest, NonT1TruncationKeepsOffDiagonalPairs) {
  auto fs = catalog_space("ex5.6").materialize();
  auto g = gdelta_diagonal(fs);
  EXPECT_FALSE(g.t1);
  EXPECT_FALSE(g.equals_diagonal);
  auto has = [&](const Point& a, const Point& b) {
    return std::find(g.off_diagonal.begin(), g.off_diagonal.end(), std::make_pair(a, b)) !=
           g.off_diagonal.end();
  };
  EXPECT_TRUE(has(q(0), q(1, 2)));
  EXPECT_TRUE(has(q(1, 3), q(0)));
}

TEST(GdeltaTest, MetricSpace) {
  auto g = gdelta_diagonal(metric_line(5));
  EXPECT_TRUE(g.equals_diagonal);
  EXPECT_EQ(gdelta_diagonal(FinitePMSpace({tag("x")}, {{Rational(3)}})).stabilization_n, 1u);
}

TEST(GdeltaTest, AgreesWithBruteForceIntersection) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto s = random_pm_space(seed, 1 + seed % 6);
    auto g = gdelta_diagonal(s);
    auto t = oracle::table_of(s);
    auto alive = oracle::surviving_pairs(t, g.stabilization_n + 10);
    ASSERT_EQ(g.off_diagonal.size(), alive.size()) << seed;
    for (const auto& [y, z] : alive)
      EXPECT_NE(std::find(g.off_diagonal.begin(), g.off_diagonal.end(),
                          std::make_pair(s.point(y), s.point(z))),
                g.off_diagonal.end());
    // Nothing changes past the stabilization index.
    EXPECT_EQ(oracle::surviving_pairs(t, g.stabilization_n), alive) << seed;
    if (g.t1) {
      EXPECT_TRUE(g.equals_diagonal);
    }
  }
}

TEST(CoverTest, SingleBallCoversInterval) {
  auto fs = catalog_space("ex4.4").materialize();
  for (const auto& eps : {Rational(1, 10), Rational(1, 2), Rational(1)})
    EXPECT_TRUE(ball_cover_check(fs, {q(1)}, eps).covers);
  EXPECT_TRUE(ball_cover_check(fs, fs.points(), Rational(1, 1000)).covers);
}

TEST(CoverTest, ApexMissedByXBalls) {
  auto apex = apex_space(4);
  std::vector<Point> xs(apex.points().begin(), apex.points().end() - 1);
  auto rep = ball_cover_check(apex, xs, Rational(1, 2));
  EXPECT_FALSE(rep.covers);
  EXPECT_EQ(rep.uncovered, tag("a"));
  EXPECT_FALSE(ball_cover_check(apex, {}, Rational(1)).covers);
  EXPECT_THROW(ball_cover_check(apex, xs, Rational(0)), ArgumentError);
}

TEST(NetTest, ApexNetSizes) {
  for (std::size_t k : {1u, 4u, 9u, 32u}) {
    auto apex = apex_space(k);
    std::vector<Point> xs(apex.points().begin(), apex.points().end() - 1);
    EXPECT_EQ(totally_bounded_at(apex.restrict(xs), Rational(1, 2)).size(), k);
    auto whole = totally_bounded_at(apex, Rational(1, 2));
    EXPECT_EQ(whole.net, std::vector<Point>{tag("a")});
  }
}

TEST(NetTest, LargeRadiusNeedsOneBall) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = random_pm_space(seed, 6);
    EXPECT_EQ(totally_bounded_at(s, diameter(s) + Rational(1)).size(), 1u);
  }
}

TEST(NetTest, GreedyNetCoversAndIsNotFarFromMinimal) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto s = random_pm_space(seed, 6);
    for (const auto& eps : {Rational(1, 2), Rational(2), Rational(5)}) {
      auto net = totally_bounded_at(s, eps);
      EXPECT_TRUE(ball_cover_check(s, net.net, eps).covers);
      EXPECT_GE(net.size(), oracle::min_cover_size(oracle::table_of(s), eps));
    }
  }
}

TEST(SeqCompactTest, NaturalsHaveLimitZero) {
  // Pairwise p(n, m) > 1, yet the whole sequence converges to 0.
  std::vector<Point> pts;
  for (long long i = 0; i <= 100; ++i) pts.push_back(Rational(i));
  auto fs = catalog_space("ex4.8").materialize(pts);
  auto w = seq_compact_witness(fs, standard_catalog().sequence("natural", 100),
                               {Rational(1, 25), 100});
  EXPECT_EQ(w.kind, SubsequenceWitness::Kind::whole_sequence);
  EXPECT_EQ(w.limit, q(0));
  EXPECT_EQ(w.indices.size(), 100u);
}

TEST(SeqCompactTest, ConstantSequenceIsItsOwnWitness) {
  auto fs = catalog_space("ex5.8").materialize();
  auto w = seq_compact_witness(fs, SequenceSpec::explicit_list({tag("b")}));
  EXPECT_EQ(w.kind, SubsequenceWitness::Kind::whole_sequence);
  EXPECT_EQ(w.limit, tag("b"));
}

TEST(SeqCompactTest, AlternatingTwoPoints) {
  auto fs = catalog_space("ex5.8").materialize();
  auto w = seq_compact_witness(fs, SequenceSpec::explicit_list({tag("a"), tag("b")}),
                               {Rational(0), 10});
  EXPECT_EQ(w.kind, SubsequenceWitness::Kind::constant_subsequence);
  EXPECT_EQ(w.limit, tag("a"));
  EXPECT_EQ(w.indices, (std::vector<std::size_t>{1, 3, 5, 7, 9}));
  EXPECT_TRUE(w.exact);
}

}  // namespace
}  // namespace pmkit
