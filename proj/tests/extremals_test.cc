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

#include "fre/extremals.hpp"

#include <set>
#include <stdexcept>

#include "fre/generate.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fre {
namespace {

using testing::D;
using testing::Idx;
using testing::M;
using testing::V;

class ReferenceTest : public ::testing::Test {
 protected:
  ReferenceTest()
      : inst_(testing::Reference10()),
        cls_(ClassifyRows(inst_)),
        ext_(ExtremalSolutions(inst_, cls_)),
        bounds_(AggregateBounds(ext_, cls_, inst_.size())) {}

  Instance inst_;
  RowClassification cls_;
  ExtremalSet ext_;
  BoundVectors bounds_;
};

TEST_F(ReferenceTest, RowClasses) {
  EXPECT_EQ(cls_.above, Idx({1, 3, 9}));
  EXPECT_EQ(cls_.tight_rows, Idx({2, 4, 5, 6}));
  EXPECT_EQ(cls_.below, Idx({7, 8, 10}));
  EXPECT_FALSE(cls_.FirstEmptySupport().has_value());
}

TEST_F(ReferenceTest, SupportSetsOfBelowRows) {
  EXPECT_EQ(cls_.support[6], Idx({1, 3, 4, 6, 9, 10}));
  EXPECT_EQ(cls_.support[7], Idx({1, 2, 4, 5, 7, 9}));
  EXPECT_EQ(cls_.support[9], Idx({1, 2, 5, 9}));
  EXPECT_EQ(cls_.tight[1], Idx({2}));
  EXPECT_TRUE(cls_.tight[7].empty());
  EXPECT_TRUE(cls_.InSupport(6, 0));
  EXPECT_FALSE(cls_.InSupport(6, 1));
}

TEST_F(ReferenceTest, StrictAndTightSplitEveryRow) {
  for (std::size_t i = 0; i < inst_.size(); ++i) {
    std::set<std::size_t> merged(cls_.strict[i].begin(), cls_.strict[i].end());
    for (std::size_t j : cls_.tight[i]) EXPECT_TRUE(merged.insert(j).second);
    EXPECT_EQ(std::vector<std::size_t>(merged.begin(), merged.end()),
              cls_.support[i]);
    for (std::size_t j = 0; j < inst_.size(); ++j) {
      EXPECT_EQ(cls_.InSupport(i, j), inst_.a(i, j) >= inst_.rhs()[i]);
    }
  }
}

TEST_F(ReferenceTest, ExtremalsOfTightRow) {
  EXPECT_EQ(ext_.Upper(1, 1), V({"1", "0.57", "1", "1", "1", "1", "1", "1", "1", "1"}));
  EXPECT_EQ(ext_.Upper(1, 2),
            V({"0.57", "1", "1", "0.57", "1", "0.57", "1", "1", "0.57", "1"}));
  EXPECT_EQ(ext_.rows[1].lower, V({"0", "0.57", "0", "0", "0", "0", "0", "0", "0", "0"}));
  EXPECT_EQ(ext_.Upper(3, 2),
            V({"1", "1", "0.40", "1", "1", "1", "0.40", "0.40", "0.40", "0.40"}));
}

TEST_F(ReferenceTest, ExtremalsOfBelowRows) {
  EXPECT_EQ(ext_.Upper(6, 2),
            V({"0.55", "1", "0.55", "0.55", "1", "0.55", "1", "1", "0.55", "0.55"}));
  EXPECT_EQ(ext_.Minimal(6, 8),
            V({"0", "0", "0", "0", "0", "0", "0.55", "0", "0.55", "0"}));
  EXPECT_EQ(ext_.Minimal(9, 4),
            V({"0", "0", "0", "0", "0.53", "0", "0", "0", "0", "0.53"}));
  EXPECT_EQ(ext_.rows[6].minimal.size(), 6u);
  EXPECT_TRUE(ext_.rows[6].lower.empty());
  EXPECT_THROW(ext_.Minimal(6, 1), std::out_of_range);
}

TEST_F(ReferenceTest, ExtremalsOfAboveRow) {
  EXPECT_EQ(ext_.Upper(0, 1), V({"0.66", "1", "1", "1", "1", "1", "1", "1", "1", "1"}));
  EXPECT_EQ(ext_.rows[0].lower, V({"0.66", "0", "0", "0", "0", "0", "0", "0", "0", "0"}));
  EXPECT_TRUE(ext_.rows[0].upper2.empty());
}

TEST_F(ReferenceTest, AggregateBounds) {
  EXPECT_EQ(bounds_.upper_above,
            V({"0.66", "1", "0.14", "1", "1", "1", "1", "1", "0.04", "1"}));
  EXPECT_EQ(bounds_.lower_above,
            V({"0.66", "0", "0.14", "0", "0", "0", "0", "0", "0.04", "0"}));
  EXPECT_EQ(bounds_.lower_tight,
            V({"0", "0.57", "0", "0.40", "0.45", "0.79", "0", "0", "0", "0"}));
  EXPECT_EQ(bounds_.FixedLower(),
            V({"0.66", "0.57", "0.14", "0.40", "0.45", "0.79", "0", "0", "0.04", "0"}));
}

TEST_F(ReferenceTest, SelectorBoundsOfWorkedChoices) {
  Triple t;
  t.tight_pick = {2, 1, 2, 1};
  t.below_pick = {1, 1, 2};
  // The worked choice of row 8 is column 2; see the ledger for the
  // mislabelled index.
  t.minimal_pick = Idx({9, 2, 5});
  const SelectorBounds sb = ComputeSelectorBounds(ext_, cls_, t, inst_.size());
  EXPECT_EQ(sb.upper_tight,
            V({"0.45", "0.45", "0.45", "0.40", "1", "0.57", "0.45", "0.45", "0.45", "0.45"}));
  EXPECT_EQ(sb.upper_below,
            V({"0.53", "0.53", "1", "1", "0.53", "1", "0.55", "0.62", "0.53", "1"}));
  EXPECT_EQ(sb.lower_minimal,
            V({"0", "0.62", "0", "0", "0.53", "0", "0.55", "0.62", "0.55", "0.53"}));
}

TEST_F(ReferenceTest, InvalidSelectorsThrow) {
  Triple t;
  t.tight_pick = {1, 1, 1, 1};
  t.below_pick = {1, 1, 1};
  t.minimal_pick = Idx({1, 1, 1});
  EXPECT_NO_THROW(ComputeSelectorBounds(ext_, cls_, t, inst_.size()));

  Triple bad_type = t;
  bad_type.tight_pick[0] = 3;
  EXPECT_THROW(ComputeSelectorBounds(ext_, cls_, bad_type, inst_.size()),
               std::invalid_argument);
  Triple bad_column = t;
  bad_column.minimal_pick[0] = 1;  // column 2 is outside J_7
  EXPECT_THROW(ComputeSelectorBounds(ext_, cls_, bad_column, inst_.size()),
               std::invalid_argument);
  Triple bad_shape = t;
  bad_shape.below_pick.pop_back();
  EXPECT_THROW(ComputeSelectorBounds(ext_, cls_, bad_shape, inst_.size()),
               std::invalid_argument);
}

TEST_F(ReferenceTest, CellOfWorkedChoiceIsEmpty) {
  Triple t;
  t.tight_pick = {2, 1, 2, 1};
  t.below_pick = {1, 1, 2};
  t.minimal_pick = Idx({9, 2, 5});
  const Cell cell =
      CellOf(bounds_, ComputeSelectorBounds(ext_, cls_, t, inst_.size()));
  // lower = max(fixed lower, minimal bound), upper = min of the three uppers.
  EXPECT_EQ(cell.lower,
            V({"0.66", "0.62", "0.14", "0.40", "0.53", "0.79", "0.55", "0.62", "0.55", "0.53"}));
  EXPECT_EQ(cell.upper,
            V({"0.45", "0.45", "0.14", "0.40", "0.53", "0.57", "0.45", "0.45", "0.04", "0.45"}));
  EXPECT_TRUE(cell.empty());
}

TEST(ClassifyRowsTest, EmptySupportDetected) {
  const Instance inst = testing::Make(M({{"0.2"}}), V({"0.6"}), V({"1"}));
  const RowClassification cls = ClassifyRows(inst);
  ASSERT_TRUE(cls.FirstEmptySupport().has_value());
  EXPECT_EQ(*cls.FirstEmptySupport(), 0u);
  EXPECT_EQ(cls.below, Idx({1}));
}

TEST(ExtremalsTest, SingleTightRow) {
  const Instance inst = testing::Make(M({{"0.5"}}), V({"0.5"}), V({"1"}));
  const RowClassification cls = ClassifyRows(inst);
  const ExtremalSet ext = ExtremalSolutions(inst, cls);
  EXPECT_EQ(cls.tight_rows, Idx({1}));
  EXPECT_EQ(ext.Upper(0, 1), V({"0.5"}));
  EXPECT_EQ(ext.Upper(0, 2), V({"1"}));
  EXPECT_EQ(ext.rows[0].lower, V({"0.5"}));
}

TEST(AggregateBoundsTest, NoAboveRowsUsesTrivialBounds) {
  const Instance inst = testing::Make(M({{"0.5", "0.7"}, {"0.1", "0.3"}}),
                                      V({"0.5", "0.3"}), V({"1", "1"}));
  const RowClassification cls = ClassifyRows(inst);
  ASSERT_TRUE(cls.above.empty());
  const BoundVectors b = AggregateBounds(ExtremalSolutions(inst, cls), cls, 2);
  EXPECT_EQ(b.upper_above, V({"1", "1"}));
  EXPECT_EQ(b.lower_above, V({"0", "0"}));
  EXPECT_EQ(b.lower_tight, V({"0.5", "0.3"}));
}

TEST(CellTest, WholeCubeAndEmptiness) {
  const Cell cube{V({"0", "0"}), V({"1", "1"})};
  EXPECT_FALSE(cube.empty());
  EXPECT_TRUE(cube.Contains(V({"0", "1"})));
  EXPECT_FALSE(cube.Contains(V({"0", "1.5"})));
  const Cell inner{V({"0.2", "0"}), V({"0.5", "1"})};
  EXPECT_TRUE(inner.Within(cube));
  EXPECT_FALSE(cube.Within(inner));
  const Cell broken{V({"0.6", "0"}), V({"0.5", "1"})};
  EXPECT_TRUE(broken.empty());
  EXPECT_FALSE(broken.Contains(V({"0.55", "0.5"})));
}

TEST(CellTest, CellOfTrivialBoundsIsCube) {
  BoundVectors bounds{V({"0", "0"}), V({"1", "1"}), V({"0", "0"})};
  SelectorBounds sel{V({"1", "1"}), V({"1", "1"}), V({"0", "0"})};
  EXPECT_EQ(CellOf(bounds, sel), (Cell{V({"0", "0"}), V({"1", "1"})}));
}

// Every extremal vector satisfies its own row and has entries in {0, b_i, 1}.
TEST(ExtremalsProperty, EachExtremalSolvesItsRow) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    FreParams params;
    params.n = 1 + seed % 6;
    params.decimals = 1 + seed % 2;
    params.density = 0.5 + 0.1 * static_cast<double>(seed % 5);
    params.seed = seed;
    const Instance inst = RandomFre(params);
    const RowClassification cls = ClassifyRows(inst);
    if (cls.FirstEmptySupport()) continue;
    const ExtremalSet ext = ExtremalSolutions(inst, cls);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const Decimal& bi = inst.rhs()[i];
      std::vector<const Vector*> vs = {&ext.rows[i].upper1};
      if (!ext.rows[i].upper2.empty()) vs.push_back(&ext.rows[i].upper2);
      if (!ext.rows[i].lower.empty()) vs.push_back(&ext.rows[i].lower);
      for (const auto& [j, v] : ext.rows[i].minimal) vs.push_back(&v);
      for (const Vector* v : vs) {
        EXPECT_EQ(ComposeRow(inst, i, *v), bi) << "seed " << seed << " row " << i;
        for (const Decimal& e : *v) {
          EXPECT_TRUE(e.IsZero() || e == bi || e == Decimal::One());
        }
      }
    }
  }
}

TEST(ClassifyRowsProperty, ClassesPartitionRows) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    FreParams params;
    params.n = 1 + seed % 8;
    params.seed = seed;
    const Instance inst = RandomFre(params);
    const RowClassification cls = ClassifyRows(inst);
    std::set<std::size_t> seen;
    for (const auto* part : {&cls.above, &cls.tight_rows, &cls.below}) {
      for (std::size_t i : *part) EXPECT_TRUE(seen.insert(i).second);
    }
    EXPECT_EQ(seen.size(), inst.size());
    for (std::size_t i : cls.above) EXPECT_GT(inst.a(i, i), inst.rhs()[i]);
    for (std::size_t i : cls.tight_rows) EXPECT_EQ(inst.a(i, i), inst.rhs()[i]);
    for (std::size_t i : cls.below) EXPECT_LT(inst.a(i, i), inst.rhs()[i]);
  }
}

}  // namespace
}  // namespace fre
