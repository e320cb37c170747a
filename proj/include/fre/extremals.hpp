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

// Structure of the feasible set.
//
// Each row i falls in one of three classes by comparing the diagonal a_ii
// with b_i. The solution set of a single row is then a union of boxes whose
// corners are built from three values only: 0, b_i and 1.
//
//   a_ii > b_i   one box  [lower(i), upper(i)]
//   a_ii = b_i   two boxes sharing lower(i), with upper(i,1) and upper(i,2)
//   a_ii < b_i   boxes [minimal(i,j), upper(i,v)] for j in J_i, v in {1,2}
//
// The whole system is the intersection over rows; distributing the
// intersection over the unions gives one box per choice of selectors
// (Triple) below.

#ifndef FRE_EXTREMALS_HPP_
#define FRE_EXTREMALS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fre/model.hpp"

namespace fre {

enum class RowClass : uint8_t {
  kAbove,  // a_ii > b_i
  kTight,  // a_ii = b_i
  kBelow,  // a_ii < b_i
};

struct RowClassification {
  // Per row: J_i^1 = {j : a_ij > b_i}, J_i^2 = {j : a_ij = b_i} and their
  // union J_i, all ascending.
  std::vector<std::vector<std::size_t>> strict;
  std::vector<std::vector<std::size_t>> tight;
  std::vector<std::vector<std::size_t>> support;
  std::vector<RowClass> row_class;

  // Rows of each class, ascending. Their union is every row.
  std::vector<std::size_t> above;
  std::vector<std::size_t> tight_rows;
  std::vector<std::size_t> below;

  // First row with an empty J_i; such a row can never be satisfied.
  std::optional<std::size_t> FirstEmptySupport() const;

  bool InSupport(std::size_t row, std::size_t column) const;
};

RowClassification ClassifyRows(const Instance& instance);

struct Cell {
  Vector lower;
  Vector upper;

  bool empty() const;
  bool Contains(const Vector& x) const;
  // True when this box lies inside `other`.
  bool Within(const Cell& other) const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct RowExtremals {
  RowClass kind = RowClass::kAbove;
  // Maximum solution for kAbove rows; type-1 maximal solution otherwise.
  // Both are b_i at position i and 1 elsewhere.
  Vector upper1;
  // Type-2 maximal solution: b_i where a_ij > b_i, 1 elsewhere. Empty for
  // kAbove rows.
  Vector upper2;
  // Minimum solution (b_i at i, 0 elsewhere). Empty for kBelow rows.
  Vector lower;
  // Minimal solutions of a kBelow row: b_i at positions i and j, for each
  // j in J_i ascending.
  std::vector<std::pair<std::size_t, Vector>> minimal;
};

struct ExtremalSet {
  std::vector<RowExtremals> rows;

  const Vector& Upper(std::size_t row, int variant) const;
  // Throws std::out_of_range if `column` is not in J_row.
  const Vector& Minimal(std::size_t row, std::size_t column) const;
};

// Requires nothing of the support sets; a kBelow row with empty J_i simply
// has no minimal solutions.
ExtremalSet ExtremalSolutions(const Instance& instance,
                              const RowClassification& cls);

// Aggregates over the fixed families. Over an empty family the max is the
// zero vector and the min is the all-ones vector.
struct BoundVectors {
  Vector lower_above;  // max of lower(i), i in above
  Vector upper_above;  // min of upper(i), i in above
  Vector lower_tight;  // max of lower(i), i in tight_rows

  // Componentwise max{lower_above, lower_tight}.
  Vector FixedLower() const;
};

BoundVectors AggregateBounds(const ExtremalSet& ext,
                             const RowClassification& cls, std::size_t n);

// A choice of one box per tight and below row.
//
// `minimal_pick[k]` is the column j in J_i chosen for the k-th below row,
// `tight_pick[k]` the maximal-solution type (1 or 2) of the k-th tight row
// and `below_pick[k]` that of the k-th below row. The defaulted ordering is
// lexicographic in (minimal_pick, tight_pick, below_pick), which is the
// enumeration and tie-break order everywhere.
struct Triple {
  std::vector<std::size_t> minimal_pick;
  std::vector<uint8_t> tight_pick;
  std::vector<uint8_t> below_pick;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct SelectorBounds {
  Vector upper_tight;    // min over tight rows of upper(i, tight_pick)
  Vector upper_below;    // min over below rows of upper(i, below_pick)
  Vector lower_minimal;  // max over below rows of minimal(i, minimal_pick)
};

// Throws std::invalid_argument when a pick lies outside its domain or the
// triple's shape does not match the classification.
SelectorBounds ComputeSelectorBounds(const ExtremalSet& ext,
                                     const RowClassification& cls,
                                     const Triple& triple, std::size_t n);

// [max{fixed lowers, lower_minimal}, min{upper_above, upper_tight,
// upper_below}].
Cell CellOf(const BoundVectors& bounds, const SelectorBounds& selected);

}  // namespace fre

#endif  // FRE_EXTREMALS_HPP_
