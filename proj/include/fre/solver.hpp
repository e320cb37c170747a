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

// Exact optimization over the feasible set.
//
// The feasible set is the union of the nonempty cells over all selector
// triples. A linear objective attains its optimum over a box at a corner
// chosen per coordinate by the sign of c_j, so the optimum is the best such
// corner over all nonempty cells. Solve() gates on the cheap infeasibility
// certificates, prunes selector domains, then streams the remaining triples.

#ifndef FRE_SOLVER_HPP_
#define FRE_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fre/extremals.hpp"
#include "fre/model.hpp"
#include "fre/reduction.hpp"

namespace fre {

struct SolveOptions {
  bool apply_rules = true;
  // Worker threads for triple enumeration; 0 reads FRE_THREADS and falls
  // back to 1. Results do not depend on this value.
  unsigned threads = 0;
};

// Resolves SolveOptions::threads.
unsigned EffectiveThreads(unsigned requested);

// The structures every stage derives from an instance.
struct Analysis {
  RowClassification cls;
  ExtremalSet ext;
  BoundVectors bounds;
};

Analysis Analyze(const Instance& instance);

// Empty support first, then the fixed-bound conflict.
std::optional<Verdict> GateFeasibility(const Analysis& analysis);

// Mixed-radix view of the product of the selector domains. Index 0 is the
// lexicographically smallest triple and increasing indices follow the
// lexicographic order of Triple.
class TripleSpace {
 public:
  explicit TripleSpace(const Domains& domains);

  // Throws std::length_error when the product does not fit in 63 bits.
  uint64_t size() const { return size_; }
  Triple At(uint64_t index) const;

 private:
  std::vector<const std::vector<std::size_t>*> minimal_;
  std::vector<const std::vector<uint8_t>*> tight_;
  std::vector<const std::vector<uint8_t>*> below_;
  uint64_t size_ = 1;
};

Cell CellOfTriple(const Analysis& analysis, const Triple& triple);

struct Candidate {
  Triple triple;
  Cell cell;
  Vector x;
  Decimal objective;
};

// Picks the cell corner that is best for `sense`: cost-nonnegative columns
// at the lower end when minimizing, the rest at the upper end; reversed when
// maximizing.
Candidate MakeCandidate(Triple triple, Cell cell, const Vector& costs,
                        Sense sense);

// True when `a` is strictly preferable to `b`: better objective, or equal
// objective and smaller triple.
bool Better(const Candidate& a, const Candidate& b, Sense sense);

// Calls `visit` for each triple with a nonempty cell, in index order, and
// returns the number of triples examined.
uint64_t EnumerateAdmissible(
    const Analysis& analysis, const Domains& domains,
    const std::function<void(const Triple&, const Cell&)>& visit);

enum class Status { kOptimal, kInfeasible };

struct SolveStatistics {
  uint64_t full_space = 0;    // triples before pruning (saturating)
  uint64_t search_space = 0;  // triples after pruning (saturating)
  uint64_t enumerated = 0;
  uint64_t admissible = 0;

  friend bool operator==(const SolveStatistics&,
                         const SolveStatistics&) = default;
};

struct Solution {
  Status status = Status::kInfeasible;
  std::optional<Candidate> best;
  std::optional<Verdict> verdict;
  SolveStatistics stats;
  ReductionState reduction;
};

Solution Solve(const Instance& instance, const SolveOptions& options = {});

struct RegionCell {
  Triple triple;
  Cell cell;
};

struct Region {
  std::optional<Verdict> verdict;
  std::vector<RegionCell> cells;
};

// All nonempty cells in triple order. Duplicate cells are always dropped;
// with `prune_dominated` so is any cell contained in another one (the first
// of a set of equal cells survives).
Region FeasibleRegion(const Instance& instance, bool prune_dominated,
                      const SolveOptions& options = {});

}  // namespace fre

#endif  // FRE_SOLVER_HPP_
