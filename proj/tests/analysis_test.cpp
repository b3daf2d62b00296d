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

#include "pmkit/analysis.hpp"

#include <gtest/gtest.h>

#include "pmkit/catalog.hpp"
#include "pmkit/random.hpp"

namespace pmkit {
namespace {

Point q(long long n, long long d = 1) { return Rational(n, d); }

SequenceSpec alternating_sets() { return SequenceSpec::explicit_list({set_of("a"), set_of("b")}); }

const Tolerance kExact{Rational(0), 64};

TEST(SequenceSpecTest, ExplicitListsRepeat) {
  auto s = SequenceSpec::explicit_list({q(1), q(2), q(3)}, 2);
  std::vector<Point> got;
  for (std::size_t n = 1; n <= 7; ++n) got.push_back(s.at(n));
  EXPECT_EQ(got, (std::vector<Point>{q(1), q(2), q(3), q(2), q(3), q(2), q(3)}));
  EXPECT_EQ(s.determining_prefix(), 3u);
  EXPECT_THROW(SequenceSpec::explicit_list({}), ArgumentError);
  EXPECT_THROW(SequenceSpec::explicit_list({q(1)}, 2), ArgumentError);
  EXPECT_THROW(s.at(0), ArgumentError);
}

TEST(SequenceSpecTest, DeclaredPeriodIsChecked) {
  auto bad = SequenceSpec::generator(
      "bad", [](std::size_t n) -> Point { return Rational(n < 5 ? 0 : 1); }, 20, false,
      Periodicity{1, 1});
  EXPECT_THROW(bad.verify_period(20), InvariantViolation);
  EXPECT_THROW(converges_to(catalog_space("ex5.4"), bad, q(0), kExact), InvariantViolation);
}

TEST(ConvergesToTest, AlternatingSetsConvergeToUnion) {
  auto rep = converges_to(catalog_space("ex3.2"), alternating_sets(), set_of("ab"), kExact);
  EXPECT_EQ(rep.mode, ConvergenceMode::converges);
  EXPECT_TRUE(rep.exact);
  EXPECT_EQ(rep.achieved_gap, Rational(0));
  EXPECT_EQ(rep.tail_start, 1u);
}

TEST(ConvergesToTest, AlternatingSetsDoNotConvergeToEither) {
  auto rep = converges_to(catalog_space("ex3.2"), alternating_sets(), set_of("a"), kExact);
  EXPECT_EQ(rep.mode, ConvergenceMode::refuted);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->index, 2u);
  EXPECT_EQ(rep.witness->gap, Rational(1));
}

TEST(ConvergesToTest, ConstantSequence) {
  const auto& s = catalog_space("ex5.4");
  auto seq = SequenceSpec::explicit_list({q(9, 4)});
  for (const auto& tol : {Rational(0), Rational(1, 1000000), Rational(1)})
    EXPECT_EQ(converges_to(s, seq, q(9, 4), {tol, 10}).mode, ConvergenceMode::converges);
}

TEST(ConvergesToTest, NaturalsConvergeToZero) {
  const auto& s = catalog_space("ex4.8");
  // gap p(n,0) - p(0,0) = 1/n, so the certified tail starts at n = 1/tol.
  for (long long k : {5, 25, 100, 1000}) {
    auto rep = converges_to(s, standard_catalog().sequence("natural", 10000), q(0),
                            {Rational(1, k), 10000});
    EXPECT_EQ(rep.mode, ConvergenceMode::converges);
    EXPECT_EQ(rep.tail_start, static_cast<std::size_t>(k));
    EXPECT_EQ(rep.achieved_gap, Rational(1, k));
  }
}

TEST(ConvergesToTest, FinalQuarterRule) {
  const auto& s = catalog_space("ex4.8");
  auto nat = standard_catalog().sequence("natural", 100);
  // Tail from 76 is exactly the final quarter of 100 indices.
  EXPECT_EQ(converges_to(s, nat, q(0), {Rational(1, 76), 100}).mode, ConvergenceMode::converges);
  auto late = converges_to(s, nat, q(0), {Rational(1, 77), 100});
  EXPECT_EQ(late.mode, ConvergenceMode::inconclusive);
  EXPECT_EQ(late.tail_start, 77u);
}

TEST(ConvergesToTest, ExactTailRefutesConstantGap) {
  // p(1/n, 1) - p(1, 1) = 1 for every n >= 2.
  auto rep = converges_to(catalog_space("ex5.5"), standard_catalog().sequence("inverse", 200),
                          q(1), {Rational(1, 2), 200});
  EXPECT_EQ(rep.mode, ConvergenceMode::refuted);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->gap, Rational(1));
}

TEST(ConvergesToTest, ShrinkingGapIsNeverRefuted) {
  // p(n, 1) - p(1, 1) = 1 + 1/n stays above 1 but keeps moving.
  auto above = converges_to(catalog_space("ex4.8"), standard_catalog().sequence("natural", 200),
                            q(1), {Rational(1, 2), 200});
  EXPECT_EQ(above.mode, ConvergenceMode::inconclusive);
  // p(1/n, 0) - p(0, 0) = 1/n: a true limit, not certifiable at tol 0.
  auto zero = converges_to(catalog_space("ex3.4"), standard_catalog().sequence("inverse", 100),
                           q(0), {Rational(0), 100});
  EXPECT_EQ(zero.mode, ConvergenceMode::inconclusive);
  EXPECT_TRUE(converges_to(catalog_space("ex3.4"), standard_catalog().sequence("inverse", 100),
                           q(0), {Rational(1, 50), 100})
                  .certified());
}

TEST(ConvergesToTest, SlowTailWithoutExactnessIsInconclusive) {
  auto orbit = standard_catalog().sequence("orbit:ex5.4.T:0", 10);
  auto rep = converges_to(catalog_space("ex5.4"), orbit, q(1), {Rational(1, 1000000), 10});
  EXPECT_EQ(rep.mode, ConvergenceMode::inconclusive);
}

TEST(ConvergesToTest, Errors) {
  const auto& s = catalog_space("ex4.8");
  auto nat = standard_catalog().sequence("natural", 10);
  EXPECT_THROW(converges_to(s, nat, q(0), {Rational(-1), 10}), ArgumentError);
  EXPECT_THROW(converges_to(s, nat, q(0), {Rational(1), 0}), ArgumentError);
  EXPECT_THROW(converges_to(s, nat, q(1, 2), {Rational(1), 10}), DomainError);
}

TEST(ProperlyConvergesTest, ConvergenceWithoutProperness) {
  const auto& s = catalog_space("ex5.5");
  auto inv = standard_catalog().sequence("inverse", 500);
  EXPECT_EQ(converges_to(s, inv, q(0), {Rational(0), 500}).mode, ConvergenceMode::converges);
  auto rep = properly_converges(s, inv, q(0), {Rational(0), 500});
  EXPECT_EQ(rep.mode, ConvergenceMode::refuted);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->kind, GapKind::self_distance);
  EXPECT_EQ(rep.witness->gap, Rational(1));
}

TEST(ProperlyConvergesTest, ConstantSequence) {
  auto seq = SequenceSpec::explicit_list({tag("b")});
  EXPECT_EQ(properly_converges(catalog_space("ex5.8"), seq, tag("b"), kExact).mode,
            ConvergenceMode::properly_converges);
}

TEST(ProperlyConvergesTest, DyadicOrbitToOne) {
  // T^n(0) = 1 - 2^-n: p(x_n, 1) = 2^-n and p(x_n, x_n) = 0 = p(1, 1).
  auto orbit = standard_catalog().sequence("orbit:ex5.4.T:0", 200);
  for (std::size_t n = 1; n <= 40; ++n)
    ASSERT_EQ(orbit.at(n), Point(Rational(1) - pow2_inverse(static_cast<unsigned>(n))));
  auto rep = properly_converges(catalog_space("ex5.4"), orbit, q(1), {Rational(1, 1000000), 200});
  EXPECT_EQ(rep.mode, ConvergenceMode::properly_converges);
  EXPECT_EQ(rep.tail_start, 20u);  // 2^-20 <= 10^-6 < 2^-19
}

TEST(ProperlyConvergesTest, MatchesInducedMetricOnCatalogSequences) {
  const auto& s55 = catalog_space("ex5.5");
  auto inv = standard_catalog().sequence("inverse", 400);
  const Tolerance t{Rational(1, 100), 400};
  for (const auto& x : s55.canonical_sample())
    EXPECT_EQ(properly_converges(s55, inv, x, t).certified(),
              converges_in_induced_metric(s55, inv, x, t).certified())
        << to_string(x);
  const auto& s48 = catalog_space("ex4.8");
  auto nat = standard_catalog().sequence("natural", 400);
  for (const auto& x : s48.canonical_sample())
    EXPECT_EQ(properly_converges(s48, nat, x, t).certified(),
              converges_in_induced_metric(s48, nat, x, t).certified())
        << to_string(x);
}

TEST(IsCauchyTest, AlternatingSetsOscillate) {
  auto rep = is_cauchy(catalog_space("ex3.2"), alternating_sets(), kExact);
  EXPECT_EQ(rep.verdict, CauchyVerdict::refuted);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->low, Rational(1));
  EXPECT_EQ(rep.witness->high, Rational(2));
  EXPECT_TRUE(rep.exact);
}

TEST(IsCauchyTest, ConstantSequenceHasSelfDistanceLimit) {
  auto rep = is_cauchy(catalog_space("ex5.8"), SequenceSpec::explicit_list({tag("b")}), kExact);
  EXPECT_EQ(rep.verdict, CauchyVerdict::cauchy);
  EXPECT_EQ(rep.limit, Rational(1));
}

TEST(IsCauchyTest, NaturalsAreOneCauchy) {
  auto rep = is_cauchy(catalog_space("ex4.8"), standard_catalog().sequence("natural", 10000),
                       {Rational(1, 1000), 10000});
  EXPECT_EQ(rep.verdict, CauchyVerdict::cauchy);
  EXPECT_EQ(rep.limit, Rational(1));
  // Too tight a tolerance for the horizon: no verdict, not a refutation.
  auto tight = is_cauchy(catalog_space("ex4.8"), standard_catalog().sequence("natural", 100),
                         {Rational(1, 1000000), 100});
  EXPECT_EQ(tight.verdict, CauchyVerdict::inconclusive);
}

TEST(IsCauchyTest, InducedVerdictMatchesOnPeriodicSequences) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto s = random_pm_space(seed, 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        auto seq = SequenceSpec::explicit_list({s.point(a), s.point(b)});
        EXPECT_EQ(is_cauchy(s, seq, kExact).verdict == CauchyVerdict::cauchy,
                  is_cauchy_induced(s, seq, kExact).verdict == CauchyVerdict::cauchy);
      }
  }
}

TEST(IsCauchyTest, ProperConvergenceImpliesCauchy) {
  auto orbit = standard_catalog().sequence("orbit:ex5.4.T:3", 300);
  const Rational tol(1, 1000000);
  auto proper = properly_converges(catalog_space("ex5.4"), orbit, q(2), {tol, 300});
  ASSERT_TRUE(proper.certified());
  auto c = is_cauchy(catalog_space("ex5.4"), orbit, {Rational(3) * tol, 300});
  EXPECT_EQ(c.verdict, CauchyVerdict::cauchy);
  EXPECT_EQ(c.limit, Rational(2));
}

}  // namespace
}  // namespace pmkit
