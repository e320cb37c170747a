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

// Brute-force references for testing. Nothing here is used by Solve().
//
// Grid search. Every extremal vector has entries in
// V = {0, 1} u {b_1, ..., b_n}, so every cell corner lies in V^n, and the
// optimum of a linear objective over a finite union of boxes is attained at
// a corner. Hence the best feasible point of V^n is a global optimum, and
// an empty feasible grid means an empty feasible set. The grid search only
// uses membership testing, never the cell construction.

#ifndef FRE_ORACLE_HPP_
#define FRE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fre/extremals.hpp"
#include "fre/model.hpp"
#include "fre/vertex_cover.hpp"

namespace fre {

// V, ascending and without duplicates.
std::vector<Decimal> GridValues(const Instance& instance);

struct GridResult {
  bool feasible = false;
  Vector x;           // first optimal grid point in enumeration order
  Decimal objective;
  uint64_t points = 0;
  uint64_t feasible_points = 0;
};

constexpr uint64_t kDefaultGridBudget = 2'000'000;

// Throws std::length_error when |V|^n exceeds `budget`.
GridResult GridOptimum(const Instance& instance,
                       uint64_t budget = kDefaultGridBudget);

struct SampleOptions {
  // Probability that a coordinate is drawn from the boundary values (V, the
  // cell bounds, and one grid step either side) rather than uniformly. Pure
  // uniform sampling almost never lands on the feasible set, which needs
  // x_i >= b_i with equality somewhere; 0 restores it.
  double boundary_probability = 0.5;
};

struct Disagreement {
  Vector x;
  bool member = false;   // full membership test
  bool in_union = false; // contained in some cell
};

struct SampleReport {
  uint64_t samples = 0;
  uint64_t members = 0;
  uint64_t disagreements = 0;
  std::vector<Disagreement> examples;  // first few
};

// Draws `k` points of [0,1]^n on the grid of step 10^-p, p the instance
// precision (at least 2), and compares membership with the cell union.
SampleReport SampleFeasibility(const Instance& instance,
                               const std::vector<Cell>& cells, uint64_t k,
                               uint64_t seed, const SampleOptions& options = {});

struct BruteCover {
  std::size_t size = 0;
  std::vector<std::size_t> cover;
};

constexpr std::size_t kMaxBruteVertices = 20;

// Tries subsets by increasing size; throws std::length_error past
// kMaxBruteVertices.
BruteCover BruteForceCover(const Graph& g);

}  // namespace fre

#endif  // FRE_ORACLE_HPP_
