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

#include "pmkit/rational.hpp"

#include <random>
#include <sstream>
#include <unordered_set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pmkit/errors.hpp"

namespace pmkit {
namespace {

TEST(RationalTest, CanonicalForm) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(Rational(0, 5).to_string(), "0/1");
  EXPECT_EQ(Rational(7).to_string(), "7/1");
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), ArgumentError);
  EXPECT_THROW(Rational(1) / Rational(0), ArgumentError);
  EXPECT_THROW(Rational::parse("3/0"), ArgumentError);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(-2, 4), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(5, 6) / Rational(-5, 3), Rational(-1, 2));
  EXPECT_EQ(std::max(Rational(1, 3), Rational(2, 7)), Rational(1, 3));
  EXPECT_EQ(abs(Rational(-7, 2)), Rational(7, 2));
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_GT(Rational(10, 3), Rational(3));
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").to_string(),
            "41152263004115226300411522630/1");
  for (const char* bad : {"", "/", "1/", "a/2", "1/2/3", "1.5", " 1/2", "1/-2"})
    EXPECT_THROW(Rational::parse(bad), ArgumentError) << bad;
  std::ostringstream os;
  os << Rational(-1, 3);
  EXPECT_EQ(os.str(), "-1/3");
}

TEST(RationalTest, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).floor(), 4);
  EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(RationalTest, PowersOfTwo) {
  EXPECT_EQ(pow2_inverse(0), Rational(1));
  EXPECT_EQ(pow2_inverse(10), Rational(1, 1024));
  EXPECT_EQ(pow2_inverse(100) * pow2_inverse(100), pow2_inverse(200));
}

TEST(RationalTest, HashAgreesWithEquality) {
  std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(3, 6), Rational(1, 3)};
  EXPECT_EQ(set.size(), 2u);
}

TEST(RationalTest, SimplestBetweenKnownValues) {
  EXPECT_EQ(simplest_between(Rational(999999, 1000000), Rational(1000001, 1000000)), Rational(1));
  EXPECT_EQ(simplest_between(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(simplest_between(Rational(3, 10), Rational(4, 10)), Rational(1, 3));
  EXPECT_EQ(simplest_between(Rational(-1), Rational(1)), Rational(0));
  EXPECT_EQ(simplest_between(Rational(-4, 10), Rational(-3, 10)), Rational(-1, 3));
  EXPECT_THROW(simplest_between(Rational(1), Rational(0)), ArgumentError);
}

TEST(RationalTest, SimplestBetweenMatchesDenominatorSearch) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-200, 200), den(1, 60);
  for (int i = 0; i < 2000; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    if (b < a) std::swap(a, b);
    EXPECT_EQ(simplest_between(a, b), oracle::simplest_by_search(a, b))
        << "[" << a << ", " << b << "]";
  }
}

}  // namespace
}  // namespace pmkit
