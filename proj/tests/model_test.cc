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

#include "fre/model.hpp"

#include <random>
#include <stdexcept>

#include "fre/generate.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fre {
namespace {

using testing::D;
using testing::M;
using testing::V;

const Vector kReferenceOptimum =
    V({"0.66", "0.57", "0.14", "0.40", "0.45", "1", "0.55", "0.62", "0.04", "0.53"});

Vector RandomPoint(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> unit(0, 100);
  Vector x(n);
  for (auto& v : x) v = Decimal::FromScaled(unit(rng), 2);
  return x;
}

TEST(LoadInstanceTest, SmallestDocument) {
  const Instance inst = ParseInstance(
      R"({"A": [[0.5]], "b": [0.5], "c": [1], "sense": "min"})");
  EXPECT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.a(0, 0), D("0.5"));
  EXPECT_EQ(inst.sense(), Sense::kMinimize);
}

TEST(LoadInstanceTest, ReferenceInstanceHasOrderTen) {
  const Instance inst = testing::Reference10();
  EXPECT_EQ(inst.size(), 10u);
  EXPECT_EQ(inst.a(3, 6), D("0.99"));
  EXPECT_EQ(inst.costs()[4], D("-9.66"));
  EXPECT_EQ(inst.precision(), 2);
}

TEST(LoadInstanceTest, RejectsOutOfRangeAndMalformed) {
  EXPECT_THROW(ParseInstance(R"({"A": [[0.5]], "b": [1.5], "c": [1]})"),
               InputError);
  EXPECT_THROW(ParseInstance(R"({"A": [[-0.1]], "b": [0.5], "c": [1]})"),
               InputError);
  EXPECT_THROW(ParseInstance(R"({"A": [[0.5]], "b": [0.5]})"), InputError);
  EXPECT_THROW(ParseInstance(R"({"A": [[0.5, 1]], "b": [0.5], "c": [1]})"),
               InputError);
  EXPECT_THROW(ParseInstance("not json"), InputError);
  EXPECT_THROW(ParseInstance(R"({"A": [["x"]], "b": [0.5], "c": [1]})"),
               InputError);
  EXPECT_THROW(
      ParseInstance(R"({"A": [[0.5]], "b": [0.5], "c": [1], "sense": "up"})"),
      InputError);
}

TEST(LoadInstanceTest, DecimalStringsAreExact) {
  const Instance inst = ParseInstance(
      R"({"A": [["0.30000000000000001"]], "b": [0.3], "c": ["-1"], "sense": "max"})");
  EXPECT_NE(inst.a(0, 0), D("0.3"));
  EXPECT_EQ(inst.rhs()[0], D("0.3"));
  EXPECT_EQ(inst.sense(), Sense::kMaximize);
}

TEST(SquarifyTest, SquareInputUnchanged) {
  const Matrix a = M({{"0.1", "0.2"}, {"0.3", "0.4"}});
  const Vector b = V({"0.1", "0.2"});
  auto [sa, sb] = Squarify(a, b);
  EXPECT_EQ(sa, a);
  EXPECT_EQ(sb, b);
}

TEST(SquarifyTest, MoreRowsGainZeroColumns) {
  auto [sa, sb] = Squarify(M({{"0.1", "0.2"}, {"0.3", "0.4"}, {"0.5", "0.6"}}),
                           V({"0.1", "0.2", "0.3"}));
  ASSERT_EQ(sa.size(), 3u);
  for (const auto& row : sa) {
    ASSERT_EQ(row.size(), 3u);
    EXPECT_TRUE(row[2].IsZero());
  }
  EXPECT_EQ(sb, V({"0.1", "0.2", "0.3"}));
}

TEST(SquarifyTest, MoreColumnsGainZeroRowsWithZeroRhs) {
  auto [sa, sb] = Squarify(M({{"0.1", "0.2", "0.3"}, {"0.4", "0.5", "0.6"}}),
                           V({"0.1", "0.2"}));
  ASSERT_EQ(sa.size(), 3u);
  EXPECT_EQ(sa[2], V({"0", "0", "0"}));
  EXPECT_EQ(sb, V({"0.1", "0.2", "0"}));
}

TEST(SquarifyTest, DocumentPadsCostsForNewColumns) {
  const Instance inst = ParseInstance(
      R"({"A": [[0.5], [0.2]], "b": [0.5, 0.1], "c": [3]})");
  EXPECT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst.costs(), V({"3", "0"}));
}

TEST(ComposeRowTest, SingleTerm) {
  const Instance inst = testing::Make(M({{"0.5"}}), V({"0.5"}), V({"1"}));
  EXPECT_EQ(ComposeRow(inst, 0, V({"0.7"})), D("0.5"));
}

TEST(ComposeRowTest, ReferenceOptimumMeetsRowOne) {
  EXPECT_EQ(ComposeRow(testing::Reference10(), 0, kReferenceOptimum), D("0.66"));
}

TEST(ComposeRowTest, ZeroVectorAnnihilates) {
  const Instance inst = testing::Reference10();
  const Vector zero(10, Decimal::Zero());
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_TRUE(ComposeRow(inst, i, zero).IsZero());
  }
}

TEST(ComposeRowTest, RejectsBadArguments) {
  const Instance inst = testing::Make(M({{"0.5"}}), V({"0.5"}), V({"1"}));
  EXPECT_THROW(ComposeRow(inst, 1, V({"0.5"})), std::out_of_range);
  EXPECT_THROW(ComposeRow(inst, 0, V({"1.5"})), InputError);
  EXPECT_THROW(ComposeRow(inst, 0, V({"0.5", "0.5"})), InputError);
}

TEST(MembershipTest, ReferenceOptimumIsFeasible) {
  const Instance inst = testing::Reference10();
  const MembershipReport report = CheckMembership(inst, kReferenceOptimum);
  EXPECT_TRUE(report.feasible);
  EXPECT_TRUE(IsFeasible(inst, kReferenceOptimum));
  for (const RowCheck& r : report.rows) {
    EXPECT_TRUE(r.witness.has_value());
    EXPECT_FALSE(r.violating.has_value());
  }
}

TEST(MembershipTest, BelowRhsFailsAttainment) {
  const Instance inst = testing::Make(M({{"0.5"}}), V({"0.5"}), V({"1"}));
  const MembershipReport report = CheckMembership(inst, V({"0.3"}));
  EXPECT_FALSE(report.feasible);
  EXPECT_FALSE(report.rows[0].witness.has_value());
  EXPECT_FALSE(report.rows[0].violating.has_value());
  EXPECT_EQ(report.rows[0].achieved, D("0.3"));
}

TEST(MembershipTest, FirstViolatingColumnIsReported) {
  const Instance inst = testing::Make(M({{"0.9", "0.8", "0.7"}, {"0", "0", "0"}, {"0", "0", "0"}}),
                                      V({"0.2", "0", "0"}), V({"1", "1", "1"}));
  const MembershipReport report = CheckMembership(inst, V({"0.6", "0", "0.5"}));
  EXPECT_FALSE(report.feasible);
  ASSERT_TRUE(report.rows[0].violating.has_value());
  EXPECT_EQ(*report.rows[0].violating, 0u);
}

TEST(MembershipTest, RejectsWrongDimension) {
  EXPECT_THROW(CheckMembership(testing::Reference10(), V({"0.5"})), InputError);
}

// Feasible iff every row composes to its right-hand side, on random points
// and on points planted to be feasible.
TEST(MembershipProperty, AgreesWithRowComposition) {
  std::mt19937_64 rng(11);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    FreParams params;
    params.n = 1 + seed % 5;
    params.planted = seed % 2 == 0;
    params.seed = seed;
    params.decimals = 1;
    const Instance inst = RandomFre(params);
    for (int k = 0; k < 20; ++k) {
      const Vector x = RandomPoint(inst.size(), rng);
      bool all_rows = true;
      for (std::size_t i = 0; i < inst.size(); ++i) {
        all_rows = all_rows && ComposeRow(inst, i, x) == inst.rhs()[i];
      }
      EXPECT_EQ(CheckMembership(inst, x).feasible, all_rows);
      EXPECT_EQ(IsFeasible(inst, x), all_rows);
    }
  }
}

TEST(ComposeRowProperty, MonotoneInEveryCoordinate) {
  std::mt19937_64 rng(3);
  for (uint64_t seed = 0; seed < 100; ++seed) {
    FreParams params;
    params.n = 2 + seed % 4;
    params.seed = seed;
    const Instance inst = RandomFre(params);
    for (int k = 0; k < 20; ++k) {
      Vector x = RandomPoint(inst.size(), rng);
      Vector y = RandomPoint(inst.size(), rng);
      for (std::size_t j = 0; j < x.size(); ++j) y[j] = Max(x[j], y[j]);
      for (std::size_t i = 0; i < inst.size(); ++i) {
        EXPECT_LE(ComposeRow(inst, i, x), ComposeRow(inst, i, y));
      }
    }
  }
}

TEST(MembershipProperty, InvariantUnderReserialization) {
  std::mt19937_64 rng(5);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    FreParams params;
    params.n = 1 + seed % 6;
    params.planted = true;
    params.seed = seed;
    const Instance inst = RandomFre(params);
    const Instance again = ParseInstance(InstanceToJson(inst).dump());
    EXPECT_EQ(inst, again);
    const Vector x = RandomPoint(inst.size(), rng);
    const MembershipReport r1 = CheckMembership(inst, x);
    const MembershipReport r2 = CheckMembership(again, x);
    EXPECT_EQ(r1.feasible, r2.feasible);
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
      EXPECT_EQ(r1.rows[i].achieved, r2.rows[i].achieved);
      EXPECT_EQ(r1.rows[i].witness, r2.rows[i].witness);
      EXPECT_EQ(r1.rows[i].violating, r2.rows[i].violating);
    }
  }
}

TEST(ObjectiveTest, ReferenceOptimumValueIsExact) {
  // Independent integer evaluation in units of 10^-4.
  const int64_t c[] = {-836, 92, 411, 236, -966, -887, 575, -478, 810, 584};
  const int64_t x[] = {66, 57, 14, 40, 45, 100, 55, 62, 4, 53};
  int64_t total = 0;
  for (int j = 0; j < 10; ++j) total += c[j] * x[j];
  EXPECT_EQ(total, -130727);
  EXPECT_EQ(Objective(testing::Reference10().costs(), kReferenceOptimum),
            Decimal::FromScaled(total, 4));
}

}  // namespace
}  // namespace fre
