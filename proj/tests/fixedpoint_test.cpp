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

#include "pmkit/fixedpoint.hpp"

#include <array>

#include <gtest/gtest.h>

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

MapSpec swap_ab() { return MapSpec::from_table("swap", {{tag("a"), tag("b")}, {tag("b"), tag("a")}}); }

TEST(ContractionTest, CatalogMapWithTwoThirds) {
  auto rep = check_contraction(catalog_space("ex3.4"), catalog_map("ex3.4.T"), Rational(2, 3));
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.pairs_checked, 45u);
  EXPECT_FALSE(rep.exhaustive);
  auto [lhs, rhs] = condition_sides(catalog_space("ex3.4"), catalog_map("ex3.4.T"),
                                    Condition::contraction(Rational(2, 3)), q(0), q(1));
  EXPECT_EQ(lhs, Rational(1));
  EXPECT_EQ(rhs, Rational(8, 3));
}

TEST(ContractionTest, SmallAlphaFails) {
  // p(T0, T1) = 1 against 4 alpha.
  auto rep = check_contraction(catalog_space("ex3.4"), catalog_map("ex3.4.T"), Rational(1, 5));
  EXPECT_FALSE(rep.holds);
  ASSERT_TRUE(rep.violation);
  EXPECT_GT(rep.violation->lhs, rep.violation->rhs);
}

TEST(ContractionTest, IdentityOnMetricSpaceFails) {
  auto m = metric_line(3);
  for (const auto& a : {Rational(0), Rational(1, 2), Rational(99, 100)}) {
    auto rep = check_contraction(m, MapSpec::identity(), a);
    ASSERT_FALSE(rep.holds);
    ASSERT_TRUE(rep.violation);
    EXPECT_GT(rep.violation->lhs, rep.violation->rhs);
  }
}

TEST(ContractionTest, AlphaRange) {
  auto m = metric_line(2);
  EXPECT_THROW(check_contraction(m, MapSpec::identity(), Rational(1)), ArgumentError);
  EXPECT_THROW(check_contraction(m, MapSpec::identity(), Rational(-1, 2)), ArgumentError);
  EXPECT_THROW(check_condition_max(m, MapSpec::identity(), Rational(3, 2)), ArgumentError);
}

TEST(MaxConditionTest, CatalogMapWithHalf) {
  auto rep = check_condition_max(catalog_space("ex5.4"), catalog_map("ex5.4.T"), Rational(1, 2));
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.pairs_checked, 36u);
}

TEST(MaxConditionTest, NonConstantMapsOnTwoPointsFail) {
  auto fs = catalog_space("ex5.8").materialize();
  for (const auto& T : {MapSpec::identity(), swap_ab(), MapSpec::constant(tag("b"))})
    for (const auto& a : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      auto rep = check_condition_max(fs, T, a);
      EXPECT_FALSE(rep.holds) << T.name();
      EXPECT_TRUE(rep.exhaustive);
      ASSERT_TRUE(rep.violation);
      auto [lhs, rhs] = condition_sides(fs, T, rep.condition, rep.violation->x, rep.violation->y);
      EXPECT_EQ(lhs, rep.violation->lhs);
      EXPECT_EQ(rhs, rep.violation->rhs);
      EXPECT_GT(lhs, rhs);
    }
  EXPECT_TRUE(check_condition_max(fs, MapSpec::constant(tag("a")), Rational(0)).holds);
}

TEST(MaxConditionTest, ConstantMapIntoBottomAlwaysHolds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s = random_pm_space(seed, 5);
    for (const auto& z : bottom_set(s))
      for (const auto& a : {Rational(0), Rational(1, 3), Rational(9, 10)})
        EXPECT_TRUE(check_condition_max(s, MapSpec::constant(z), a).holds);
  }
}

TEST(MinConditionTest, ConstantIntoBottom) {
  auto fs = catalog_space("ex5.8").materialize();
  EXPECT_TRUE(check_condition_min(fs, MapSpec::constant(tag("a")), 1).holds);
  for (unsigned k : {1u, 2u, 5u}) {
    auto rep = check_condition_min(fs, MapSpec::constant(tag("b")), k);
    EXPECT_FALSE(rep.holds);
    ASSERT_TRUE(rep.violation);
    EXPECT_EQ(rep.violation->lhs, Rational(1));
    EXPECT_EQ(rep.violation->rhs, Rational(0));
  }
}

TEST(MinConditionTest, ConstantOutsideBottomFailsEverywhere) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s = random_pm_space(seed, 4);
    const Rational rho = rho_p(s).value;
    for (const auto& z : s.points()) {
      if (s.distance(z, z) == rho) continue;
      ++checked;
      for (unsigned k : {1u, 3u}) EXPECT_FALSE(check_condition_min(s, MapSpec::constant(z), k).holds);
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(MinConditionTest, SinglePointAndBadK) {
  FinitePMSpace one({tag("x")}, {{Rational(2)}});
  EXPECT_TRUE(check_condition_min(one, MapSpec::identity(), 4).holds);
  EXPECT_THROW(check_condition_min(one, MapSpec::identity(), 0), ArgumentError);
}

TEST(IterateTest, LowerBranchToOne) {
  auto tr = iterate(catalog_space("ex5.4"), catalog_map("ex5.4.T"), q(0), Rational(1, 1000000), 100);
  ASSERT_EQ(tr.outcome, IterationOutcome::fixed_point);
  EXPECT_EQ(tr.fixed_point, q(1));
  EXPECT_TRUE(tr.exact);
  for (std::size_t n = 0; n < tr.iterates.size(); ++n)
    EXPECT_EQ(tr.iterates[n], Point(Rational(1) - pow2_inverse(static_cast<unsigned>(n))));
  // Gap 2^-(n+1) first drops to 10^-6 at n = 19; eight confirming steps.
  EXPECT_EQ(tr.steps, 19u + kConfirmationWindow);
  EXPECT_EQ(tr.p_next.size(), tr.steps);
}

TEST(IterateTest, UpperBranchToTwo) {
  auto tr = iterate(catalog_space("ex5.4"), catalog_map("ex5.4.T"), q(3), Rational(1, 1000000), 100);
  ASSERT_EQ(tr.outcome, IterationOutcome::fixed_point);
  EXPECT_EQ(tr.fixed_point, q(2));
  for (std::size_t n = 0; n < tr.iterates.size(); ++n)
    EXPECT_EQ(tr.iterates[n], Point(Rational(2) + pow2_inverse(static_cast<unsigned>(n))));
}

TEST(IterateTest, ExactFixedPointInThreeSteps) {
  auto tr = iterate(catalog_space("ex3.4"), catalog_map("ex3.4.T"), q(1, 2), Rational(0), 10);
  ASSERT_EQ(tr.outcome, IterationOutcome::fixed_point);
  EXPECT_EQ(tr.fixed_point, q(-5));
  EXPECT_EQ(tr.steps, 3u);
  EXPECT_EQ(tr.iterates, (std::vector<Point>{q(1, 2), q(-7), q(-5)}));
}

TEST(IterateTest, BudgetExhaustion) {
  auto tr = iterate(catalog_space("ex5.4"), catalog_map("ex5.4.T"), q(0), Rational(1, 1000000), 5);
  EXPECT_EQ(tr.outcome, IterationOutcome::budget_exhausted);
  EXPECT_FALSE(tr.fixed_point);
  EXPECT_EQ(tr.steps, 5u);
  EXPECT_THROW(iterate(catalog_space("ex5.4"), catalog_map("ex5.4.T"), q(0), Rational(0), 0),
               ArgumentError);
}

TEST(IterateTest, CauchyWithoutFixedPoint) {
  // Halving on (0, 1] under max: settles toward 0, which is not in the space.
  MapSpec half("half", [](const Point& x) -> Point { return std::get<Rational>(x) / Rational(2); });
  auto tr = iterate(catalog_space("ex4.4"), half, q(1), Rational(1, 1000), 100);
  EXPECT_EQ(tr.outcome, IterationOutcome::certified_cauchy);
  EXPECT_FALSE(tr.fixed_point);
  EXPECT_EQ(tr.cauchy_value, Rational(0));
}

TEST(IterateTest, LeavingTheSpace) {
  MapSpec up("up", [](const Point& x) -> Point { return std::get<Rational>(x) + Rational(5); });
  EXPECT_THROW(iterate(catalog_space("ex5.4"), up, q(0), Rational(0), 3), MapClosureError);
}

TEST(BottomSolveTest, LowerBranch) {
  auto r = solve_on_bottom(catalog_space("ex5.4"), catalog_map("ex5.4.T"), Rational(1, 2), q(0),
                           Rational(1, 1000000), 100);
  ASSERT_EQ(r.status, BottomSolveResult::Status::solved);
  EXPECT_EQ(r.fixed_point, q(1));
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.reduction_holds);
  EXPECT_EQ(r.bottom_checked, (std::vector<Point>{q(0), q(1, 2), q(3, 4), q(1)}));
  EXPECT_TRUE(r.unique_in_bottom);
  EXPECT_FALSE(r.exhaustive);
  // pbar(Tx, Ty) = |x - y| / 2 on the bottom set.
  for (const auto& [x, y] : all_pairs(r.bottom_checked))
    EXPECT_EQ(p_bar(catalog_space("ex5.4"), catalog_map("ex5.4.T")(x), catalog_map("ex5.4.T")(y)),
              abs(std::get<Rational>(x) - std::get<Rational>(y)) / Rational(2));
}

TEST(BottomSolveTest, ConstantMapStopsAtOnce) {
  auto s = random_pm_space(3, 5);
  const auto z = bottom_set(s).front();
  auto r = solve_on_bottom(s, MapSpec::constant(z), Rational(1, 2), z, Rational(0), 10);
  EXPECT_EQ(r.status, BottomSolveResult::Status::solved);
  EXPECT_EQ(r.fixed_point, z);
  EXPECT_EQ(r.steps, 1u);
  EXPECT_TRUE(r.exhaustive);
}

TEST(BottomSolveTest, SingleBottomPoint) {
  auto r = solve_on_bottom(catalog_space("ex3.4").materialize(), catalog_map("ex3.4.T"),
                           Rational(2, 3), q(-5), Rational(0), 10);
  EXPECT_EQ(r.fixed_point, q(-5));
  EXPECT_TRUE(r.unique_in_bottom);
}

TEST(BottomSolveTest, EscapeIsAContradiction) {
  auto fs = catalog_space("ex5.8").materialize();
  auto r = solve_on_bottom(fs, swap_ab(), Rational(1, 2), tag("a"), Rational(0), 10);
  EXPECT_EQ(r.status, BottomSolveResult::Status::contradiction);
  EXPECT_EQ(r.escaped_image, tag("b"));
  ASSERT_TRUE(r.witness_search);
  EXPECT_FALSE(r.witness_search->holds);
  EXPECT_THROW(solve_on_bottom(fs, swap_ab(), Rational(1, 2), tag("b"), Rational(0), 10),
               ArgumentError);
}

TEST(ConstantMapBottomTest, Cases) {
  const std::array<Rational, 3> grid{Rational(0), Rational(1, 2), Rational(3, 4)};
  auto ab = constant_map_bottom(catalog_space("ex5.8").materialize(), grid);
  EXPECT_EQ(ab.points, std::vector<Point>{tag("a")});
  EXPECT_TRUE(ab.equals_bottom);
  auto s55 = constant_map_bottom(catalog_space("ex5.5").materialize(), grid);
  EXPECT_EQ(s55.points, (std::vector<Point>{q(1, 2), q(1, 3), q(1)}));
  FinitePMSpace one({tag("x")}, {{Rational(3)}});
  EXPECT_EQ(constant_map_bottom(one, grid).points, std::vector<Point>{tag("x")});
  EXPECT_THROW(constant_map_bottom(one, std::span<const Rational>{}), ArgumentError);
}

TEST(ConstantMapBottomTest, SmallestAlphaDecides) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto s = random_pm_space(seed, 5);
    const std::array<Rational, 1> low{Rational(0)};
    const std::array<Rational, 4> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(9, 10)};
    EXPECT_EQ(constant_map_bottom(s, low).points, constant_map_bottom(s, grid).points);
    EXPECT_TRUE(constant_map_bottom(s, grid).equals_bottom);
  }
}

TEST(EnumerationTest, OnlyConstantAOnTwoPoints) {
  auto fs = catalog_space("ex5.8").materialize();
  std::vector<Condition> c{Condition::max_condition(Rational(0)), Condition::max_condition(Rational(1, 2)),
                           Condition::max_condition(Rational(3, 4))};
  auto maps = exhaustive_condition_maps(fs, c);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps[0].image, (std::vector<std::size_t>{0, 0}));
}

TEST(EnumerationTest, NoConditionsListsAllMapsInOrder) {
  auto m = metric_line(3);
  auto maps = exhaustive_condition_maps(m, {});
  ASSERT_EQ(maps.size(), 27u);
  EXPECT_EQ(maps.front().image, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(maps[1].image, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(maps.back().image, (std::vector<std::size_t>{2, 2, 2}));
}

TEST(EnumerationTest, SinglePoint) {
  FinitePMSpace one({tag("x")}, {{Rational(0)}});
  const std::array<Condition, 1> c{Condition::min_condition(3)};
  EXPECT_EQ(exhaustive_condition_maps(one, c).size(), 1u);
}

TEST(EnumerationTest, RefusesLargeSpaces) {
  EXPECT_THROW(exhaustive_condition_maps(metric_line(6), {}), SizeRefusal);
}

TEST(EnumerationTest, SecondIterateConstantOnMetricSpaces) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto m = random_pm_space(seed, 3, RandomSpaceOptions{true});
    const std::array<Condition, 2> c{Condition::contraction(Rational(1, 2)), Condition::min_condition(2)};
    auto maps = exhaustive_condition_maps(m, c);
    EXPECT_GE(maps.size(), 3u);  // the constant maps
    for (const auto& t : maps) EXPECT_TRUE(compose(t, t).is_constant());
  }
}

TEST(EnumerationTest, MinConditionFixedPointsAreBottomAndUnique) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto s = random_pm_space(seed, 4);
    const Rational rho = rho_p(s).value;
    for (unsigned k : {1u, 2u, 3u}) {
      const std::array<Condition, 1> c{Condition::min_condition(k)};
      for (const auto& t : exhaustive_condition_maps(s, c)) {
        std::size_t fixed = 0;
        for (std::size_t x = 0; x < 4; ++x)
          if (t.image[x] == x) {
            ++fixed;
            EXPECT_EQ(s.at(x, x), rho);
          }
        EXPECT_LE(fixed, 1u);
      }
    }
  }
}

}  // namespace
}  // namespace pmkit
