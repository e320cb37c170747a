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

#include "fre/reduction.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace fre {
namespace {

constexpr std::array<std::string_view, 6> kCauseNames = {
    "empty-support",          "bound-conflict",
    "tight-row-exhausted",    "below-row-exhausted",
    "minimal-row-exhausted",  "no-admissible-triple",
};

uint64_t SaturatingMul(uint64_t a, uint64_t b) {
  if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
    return std::numeric_limits<uint64_t>::max();
  }
  return a * b;
}

template <typename T>
bool Erase(std::vector<T>& domain, T value) {
  auto it = std::find(domain.begin(), domain.end(), value);
  if (it == domain.end()) return false;
  domain.erase(it);
  return true;
}

MaskRow MakeRow(const Vector& v) { return MaskRow{v, false}; }

void Record(ReductionState& state, std::string name) {
  state.history.push_back(Stage{std::move(name), state.counts()});
}

std::string Row1(std::size_t i) { return std::to_string(i + 1); }

// Both types of some row removed: rows of that class can no longer be
// satisfied by any selector.
void CheckTypeRows(ReductionState& state, const std::vector<MaskRow>& type1,
                   const std::vector<MaskRow>& type2,
                   const std::vector<std::size_t>& rows,
                   InfeasibilityCause cause) {
  if (state.verdict) return;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (type1[k].disabled && type2[k].disabled) {
      state.verdict = Verdict{cause, rows[k],
                              "both maximal types of row " + Row1(rows[k]) +
                                  " were removed"};
      return;
    }
  }
}

void CheckMinimalRows(ReductionState& state, const RowClassification& cls) {
  if (state.verdict) return;
  for (std::size_t k = 0; k < cls.below.size(); ++k) {
    if (state.domains.minimal[k].empty()) {
      state.verdict = Verdict{InfeasibilityCause::kMinimalRowExhausted,
                              cls.below[k],
                              "every minimal solution of row " +
                                  Row1(cls.below[k]) + " was removed"};
      return;
    }
  }
}

// Shared body of rules 1 and 2.
void DisableBelowFixedLower(ReductionState& state, int rule,
                            const std::vector<std::size_t>& rows,
                            std::vector<MaskRow>& type1,
                            std::vector<MaskRow>& type2,
                            std::vector<std::vector<uint8_t>>& domains,
                            const Vector& fixed_lower) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (uint8_t v : {uint8_t{1}, uint8_t{2}}) {
      MaskRow& row = v == 1 ? type1[k] : type2[k];
      if (row.disabled) continue;
      for (std::size_t j = 0; j < fixed_lower.size(); ++j) {
        if (row.values[j] < fixed_lower[j]) {
          row.disabled = true;
          Erase(domains[k], v);
          state.trace.push_back(TraceEntry{rule, rows[k], v, k, j});
          break;
        }
      }
    }
  }
}

// Shared body of rules 4 and 5: type 2 of row r is useless when
// a_{r,s} > b_r and b_r < b_s for a below row s.
void DisableClashingType2(ReductionState& state, int rule,
                          const Instance& instance,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& below,
                          std::vector<MaskRow>& type2,
                          std::vector<std::vector<uint8_t>>& domains) {
  const Vector& b = instance.rhs();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (type2[k].disabled) continue;
    const std::size_t r = rows[k];
    for (std::size_t s : below) {
      if (s == r) continue;
      if (b[r] < instance.a(r, s) && b[r] < b[s]) {
        type2[k].disabled = true;
        Erase(domains[k], uint8_t{2});
        state.trace.push_back(TraceEntry{rule, r, 2, k, s});
        break;
      }
    }
  }
}

// Shared body of rules 6 and 7: a row r pinned to type 1 caps x_r at b_r,
// so no below row s with b_s > b_r may use r as its minimal column.
void DisablePinnedColumns(ReductionState& state, int rule,
                          const Instance& instance,
                          const RowClassification& cls,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::vector<uint8_t>>& pins) {
  const Vector& b = instance.rhs();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (pins[k] != std::vector<uint8_t>{1}) continue;
    const std::size_t r = rows[k];
    for (std::size_t t = 0; t < cls.below.size(); ++t) {
      const std::size_t s = cls.below[t];
      if (s == r || !cls.InSupport(s, r) || !(b[r] < b[s])) continue;
      MinimalMaskRow& entries = state.masks.minimal[t];
      if (!entries.enabled[r]) continue;
      entries.enabled[r] = false;
      Erase(state.domains.minimal[t], r);
      state.trace.push_back(TraceEntry{rule, s, r, t, r});
    }
  }
}

}  // namespace

std::string_view CauseName(InfeasibilityCause cause) {
  return kCauseNames[static_cast<std::size_t>(cause)];
}

std::optional<InfeasibilityCause> CauseFromName(std::string_view name) {
  for (std::size_t k = 0; k < kCauseNames.size(); ++k) {
    if (kCauseNames[k] == name) return static_cast<InfeasibilityCause>(k);
  }
  return std::nullopt;
}

MaskMatrices BuildMasks(const Instance& instance, const ExtremalSet& ext,
                        const RowClassification& cls) {
  const std::size_t n = instance.size();
  MaskMatrices masks;
  for (std::size_t i : cls.tight_rows) {
    masks.tight_type1.push_back(MakeRow(ext.rows[i].upper1));
    masks.tight_type2.push_back(MakeRow(ext.rows[i].upper2));
  }
  for (std::size_t i : cls.below) {
    masks.below_type1.push_back(MakeRow(ext.rows[i].upper1));
    masks.below_type2.push_back(MakeRow(ext.rows[i].upper2));
    MinimalMaskRow row;
    row.values.assign(n, Decimal::Zero());
    row.enabled.assign(n, false);
    row.values[i] = instance.rhs()[i];
    row.enabled[i] = true;
    for (std::size_t j : cls.support[i]) {
      row.values[j] = instance.rhs()[i];
      row.enabled[j] = true;
    }
    masks.minimal.push_back(std::move(row));
  }
  return masks;
}

Domains InitialDomains(const RowClassification& cls) {
  Domains d;
  d.tight.assign(cls.tight_rows.size(), {1, 2});
  d.below.assign(cls.below.size(), {1, 2});
  for (std::size_t i : cls.below) d.minimal.push_back(cls.support[i]);
  return d;
}

uint64_t Cardinalities::total() const {
  return SaturatingMul(SaturatingMul(minimal, tight), below);
}

Cardinalities CountDomains(const Domains& domains) {
  Cardinalities c;
  for (const auto& d : domains.tight) c.tight = SaturatingMul(c.tight, d.size());
  for (const auto& d : domains.below) c.below = SaturatingMul(c.below, d.size());
  for (const auto& d : domains.minimal) {
    c.minimal = SaturatingMul(c.minimal, d.size());
  }
  return c;
}

std::string MaskLabel(const TraceEntry& entry) {
  const std::string slot = std::to_string(entry.slot + 1);
  switch (entry.rule) {
    case 1:
    case 4:
      return "M" + std::to_string(entry.removed) + "[" + slot + "]";
    case 2:
    case 5:
      return "N" + std::to_string(entry.removed) + "[" + slot + "]";
    default:
      return "n[" + slot + "," + std::to_string(entry.removed + 1) + "]";
  }
}

std::string FormatTraceEntry(const TraceEntry& entry) {
  const bool removes_column = entry.rule == 3 || entry.rule >= 6;
  return "RULE" + std::to_string(entry.rule) + " target=" +
         Row1(entry.target) + " removed=" +
         (removes_column ? Row1(entry.removed)
                         : std::to_string(entry.removed)) +
         " witness=" + Row1(entry.witness);
}

ReductionState InitialState(const Instance& instance, const ExtremalSet& ext,
                            const RowClassification& cls) {
  ReductionState state;
  state.masks = BuildMasks(instance, ext, cls);
  state.domains = InitialDomains(cls);
  Record(state, "initial");
  return state;
}

void ApplyBoundRules(ReductionState& state, const RowClassification& cls,
                     const BoundVectors& bounds) {
  if (state.verdict) return;
  const Vector fixed_lower = bounds.FixedLower();
  MaskMatrices& m = state.masks;

  DisableBelowFixedLower(state, 1, cls.tight_rows, m.tight_type1,
                         m.tight_type2, state.domains.tight, fixed_lower);
  Record(state, "rule1");
  CheckTypeRows(state, m.tight_type1, m.tight_type2, cls.tight_rows,
                InfeasibilityCause::kTightRowExhausted);
  if (state.verdict) return;

  DisableBelowFixedLower(state, 2, cls.below, m.below_type1, m.below_type2,
                         state.domains.below, fixed_lower);
  Record(state, "rule2");
  CheckTypeRows(state, m.below_type1, m.below_type2, cls.below,
                InfeasibilityCause::kBelowRowExhausted);
}

void ApplyMinimalRule(ReductionState& state, const RowClassification& cls,
                      const BoundVectors& bounds) {
  if (state.verdict) return;
  for (std::size_t k = 0; k < cls.below.size(); ++k) {
    MinimalMaskRow& row = state.masks.minimal[k];
    for (std::size_t j : cls.support[cls.below[k]]) {
      if (!row.enabled[j] || !(bounds.upper_above[j] < row.values[j])) {
        continue;
      }
      row.enabled[j] = false;
      Erase(state.domains.minimal[k], j);
      state.trace.push_back(TraceEntry{3, cls.below[k], j, k, j});
    }
  }
  Record(state, "rule3");
  CheckMinimalRows(state, cls);
}

void ApplyCrossRules(ReductionState& state, const Instance& instance,
                     const RowClassification& cls) {
  if (state.verdict) return;
  MaskMatrices& m = state.masks;

  DisableClashingType2(state, 4, instance, cls.tight_rows, cls.below,
                       m.tight_type2, state.domains.tight);
  Record(state, "rule4");
  CheckTypeRows(state, m.tight_type1, m.tight_type2, cls.tight_rows,
                InfeasibilityCause::kTightRowExhausted);
  if (state.verdict) return;

  DisableClashingType2(state, 5, instance, cls.below, cls.below,
                       m.below_type2, state.domains.below);
  Record(state, "rule5");
  CheckTypeRows(state, m.below_type1, m.below_type2, cls.below,
                InfeasibilityCause::kBelowRowExhausted);
}

void ApplyPinnedRules(ReductionState& state, const Instance& instance,
                      const RowClassification& cls) {
  if (state.verdict) return;
  DisablePinnedColumns(state, 6, instance, cls, cls.tight_rows,
                       state.domains.tight);
  Record(state, "rule6");
  DisablePinnedColumns(state, 7, instance, cls, cls.below,
                       state.domains.below);
  Record(state, "rule7");
  CheckMinimalRows(state, cls);
}

ReductionState Reduce(const Instance& instance, const ExtremalSet& ext,
                      const RowClassification& cls,
                      const BoundVectors& bounds) {
  ReductionState state = InitialState(instance, ext, cls);
  ApplyBoundRules(state, cls, bounds);
  ApplyMinimalRule(state, cls, bounds);
  ApplyCrossRules(state, instance, cls);
  ApplyPinnedRules(state, instance, cls);
  return state;
}

Domains Replay(const RowClassification& cls,
               const std::vector<TraceEntry>& trace) {
  Domains d = InitialDomains(cls);
  for (const TraceEntry& e : trace) {
    bool ok = false;
    switch (e.rule) {
      case 1:
      case 4:
        ok = e.slot < d.tight.size() && cls.tight_rows[e.slot] == e.target &&
             Erase(d.tight[e.slot], static_cast<uint8_t>(e.removed));
        break;
      case 2:
      case 5:
        ok = e.slot < d.below.size() && cls.below[e.slot] == e.target &&
             Erase(d.below[e.slot], static_cast<uint8_t>(e.removed));
        break;
      case 3:
      case 6:
      case 7:
        ok = e.slot < d.minimal.size() && cls.below[e.slot] == e.target &&
             Erase(d.minimal[e.slot], e.removed);
        break;
      default:
        break;
    }
    if (!ok) {
      throw std::invalid_argument("trace entry does not apply: " +
                                  FormatTraceEntry(e));
    }
  }
  return d;
}

}  // namespace fre
