// Copyright 2026 The fre-opt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fre/decimal.hpp"

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

namespace fre {
namespace {

TEST(DecimalTest, ParsesAndPrintsShortest) {
  EXPECT_EQ(Decimal::Parse("0.40").ToString(), "0.4");
  EXPECT_EQ(Decimal::Parse("-13.0727").ToString(), "-13.0727");
  EXPECT_EQ(Decimal::Parse(".5").ToString(), "0.5");
  EXPECT_EQ(Decimal::Parse("+1").ToString(), "1");
  EXPECT_EQ(Decimal::Parse("2.5e-3").ToString(), "0.0025");
  EXPECT_EQ(Decimal::Parse("1.5E1").ToString(), "15");
  EXPECT_EQ(Decimal::Parse("-0.00").ToString(), "0");
}

TEST(DecimalTest, RejectsMalformedText) {
  for (const char* bad : {"", "-", ".", "1..2", "1e", "abc", "0.5x", "1e99"}) {
    EXPECT_THROW(Decimal::Parse(bad), std::invalid_argument) << bad;
  }
}

TEST(DecimalTest, ComparesByValueAcrossScales) {
  EXPECT_EQ(Decimal::Parse("0.4"), Decimal::Parse("0.40"));
  EXPECT_LT(Decimal::Parse("0.399"), Decimal::Parse("0.4"));
  EXPECT_GT(Decimal::Parse("1"), Decimal::Parse("0.999999999999999999"));
  EXPECT_EQ(Min(Decimal::Parse("0.3"), Decimal::Parse("0.25")).ToString(),
            "0.25");
}

TEST(DecimalTest, DoubleInputRecoversShortestDecimal) {
  EXPECT_EQ(Decimal::FromDouble(0.66), Decimal::Parse("0.66"));
  EXPECT_EQ(Decimal::FromDouble(0.1 + 0.2).ToString(), "0.30000000000000004");
  EXPECT_EQ(Decimal::FromDouble(-8.36), Decimal::Parse("-8.36"));
}

TEST(DecimalTest, ArithmeticIsExact) {
  const Decimal a = Decimal::Parse("0.1");
  const Decimal b = Decimal::Parse("0.2");
  EXPECT_EQ(a + b, Decimal::Parse("0.3"));
  EXPECT_EQ((a * b).ToString(), "0.02");
  EXPECT_EQ((a - b).ToString(), "-0.1");
  EXPECT_EQ((Decimal::Parse("-8.36") * Decimal::Parse("0.66")).ToString(),
            "-5.5176");
}

TEST(DecimalTest, OverflowThrows) {
  const Decimal big = Decimal::FromInt(4'000'000'000'000'000'000);
  EXPECT_THROW(big + big + big, std::overflow_error);
  const Decimal tiny = Decimal::FromScaled(1, 18);
  EXPECT_THROW(tiny * tiny, std::overflow_error);
}

TEST(DecimalTest, FixedRoundsHalfAwayFromZero) {
  EXPECT_EQ(Decimal::Parse("-13.0727").ToFixed(2), "-13.07");
  EXPECT_EQ(Decimal::Parse("0.125").ToFixed(2), "0.13");
  EXPECT_EQ(Decimal::Parse("-0.005").ToFixed(2), "-0.01");
  EXPECT_EQ(Decimal::Parse("1").ToFixed(2), "1.00");
  EXPECT_EQ(Decimal::Parse("0.4").ToFixed(0), "0");
}

// Integer shadow arithmetic at a common scale of 10^-4.
TEST(DecimalTest, MatchesIntegerShadowOnRandomOperands) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> dist(-1'000'000, 1'000'000);
  for (int trial = 0; trial < 2000; ++trial) {
    const int64_t x = dist(rng);
    const int64_t y = dist(rng);
    const Decimal dx = Decimal::FromScaled(x, 4);
    const Decimal dy = Decimal::FromScaled(y, 2);
    EXPECT_EQ(dx + dy, Decimal::FromScaled(x + y * 100, 4));
    EXPECT_EQ(dx * dy, Decimal::FromScaled(x * y, 6));
    EXPECT_EQ(dx < dy, x < y * 100);
    EXPECT_EQ(Decimal::Parse(dx.ToString()), dx);
  }
}

}  // namespace
}  // namespace fre
