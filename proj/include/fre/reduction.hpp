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

// Selector-domain pruning.
//
// Every tight row picks a maximal-solution type in {1,2}, every below row
// picks a type in {1,2} and a column from J_i. Seven rules remove values that
// can only ever produce empty cells. They run once, in a fixed order:
//
//   1  tight-row type v whose upper vector dips below the fixed lower bound
//   2  same for below rows
//   3  below-row column j whose minimal value exceeds the fixed upper bound
//   4  tight-row type 2 that clashes with a below row having larger b
//   5  same between two below rows
//   6  below-row column j where j is a tight row pinned to type 1, b_j < b_i
//   7  same with j a below row pinned to type 1
//
// Removals are mirrored in mask tables (one row per class member and type,
// one entry per below row and column) whose disabled flags stand in for
// infinite sentinels. A row or entry table running dry is a proof of
// infeasibility and stops the pass.

#ifndef FRE_REDUCTION_HPP_
#define FRE_REDUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fre/extremals.hpp"
#include "fre/model.hpp"

namespace fre {

struct MaskRow {
  Vector values;
  bool disabled = false;
};

struct MinimalMaskRow {
  Vector values;               // b_i on J_i and at i itself
  std::vector<bool> enabled;   // false plays the role of -infinity
};

struct MaskMatrices {
  std::vector<MaskRow> tight_type1;  // one per tight row, upper(i,1)
  std::vector<MaskRow> tight_type2;  // upper(i,2)
  std::vector<MaskRow> below_type1;  // one per below row
  std::vector<MaskRow> below_type2;
  std::vector<MinimalMaskRow> minimal;  // one per below row
};

MaskMatrices BuildMasks(const Instance& instance, const ExtremalSet& ext,
                        const RowClassification& cls);

enum class InfeasibilityCause : uint8_t {
  kEmptySupport,         // some J_i is empty
  kBoundConflict,        // fixed lower bound exceeds fixed upper bound
  kTightRowExhausted,    // both types of a tight row removed
  kBelowRowExhausted,    // both types of a below row removed
  kMinimalRowExhausted,  // every column of a below row removed
  kNoAdmissibleTriple,   // every remaining selector choice has an empty cell
};

// Stable identifier used in reports ("empty-support", ...).
std::string_view CauseName(InfeasibilityCause cause);
std::optional<InfeasibilityCause> CauseFromName(std::string_view name);

struct Verdict {
  InfeasibilityCause cause;
  std::size_t row = 0;  // offending row; unused for kNoAdmissibleTriple
  std::string detail;
};

struct Domains {
  std::vector<std::vector<uint8_t>> tight;      // per tight row
  std::vector<std::vector<uint8_t>> below;      // per below row
  std::vector<std::vector<std::size_t>> minimal;  // per below row

  friend bool operator==(const Domains&, const Domains&) = default;
};

// Full domains: {1,2} everywhere and J_i for each below row.
Domains InitialDomains(const RowClassification& cls);

// Product sizes of the three selector families; saturate at UINT64_MAX.
struct Cardinalities {
  uint64_t tight = 1;
  uint64_t below = 1;
  uint64_t minimal = 1;

  uint64_t total() const;
  friend bool operator==(const Cardinalities&, const Cardinalities&) = default;
};

Cardinalities CountDomains(const Domains& domains);

struct TraceEntry {
  int rule = 0;
  // Row whose domain shrank and the value removed: a type (1 or 2) for
  // rules 1, 2, 4 and 5, a column for rules 3, 6 and 7.
  std::size_t target = 0;
  std::size_t removed = 0;
  // Position of the target among its class, i.e. the mask row.
  std::size_t slot = 0;
  // Column (rules 1-3) or row (rules 4-7) that triggered the removal.
  std::size_t witness = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Mask-style name of what a trace entry disabled, 1-based: "M2[2]" for the
// second tight row's type-2 row, "N1[1]" for a below row, "n[1,3]" for a
// minimal entry.
std::string MaskLabel(const TraceEntry& entry);

// One-line rendering, 1-based: "RULE4 target=4 removed=2 witness=7".
std::string FormatTraceEntry(const TraceEntry& entry);

struct Stage {
  std::string name;  // "initial", "rule1", ..., "rule7"
  Cardinalities counts;
};

struct ReductionState {
  MaskMatrices masks;
  Domains domains;
  std::vector<TraceEntry> trace;
  std::vector<Stage> history;
  std::optional<Verdict> verdict;

  Cardinalities counts() const { return CountDomains(domains); }
};

ReductionState InitialState(const Instance& instance, const ExtremalSet& ext,
                            const RowClassification& cls);

// Rules 1 and 2, each followed by its row-exhaustion check.
void ApplyBoundRules(ReductionState& state, const RowClassification& cls,
                     const BoundVectors& bounds);

// Rule 3, followed by the minimal-row exhaustion check.
void ApplyMinimalRule(ReductionState& state, const RowClassification& cls,
                      const BoundVectors& bounds);

// Rules 4 and 5.
void ApplyCrossRules(ReductionState& state, const Instance& instance,
                     const RowClassification& cls);

// Rules 6 and 7, then the minimal-row exhaustion check once more.
void ApplyPinnedRules(ReductionState& state, const Instance& instance,
                      const RowClassification& cls);

// Runs all seven rules in order, stopping at the first verdict.
ReductionState Reduce(const Instance& instance, const ExtremalSet& ext,
                      const RowClassification& cls, const BoundVectors& bounds);

// Re-applies the removals of `trace` to full domains. Throws
// std::invalid_argument if an entry names a value that is not present.
Domains Replay(const RowClassification& cls,
               const std::vector<TraceEntry>& trace);

}  // namespace fre

#endif  // FRE_REDUCTION_HPP_
