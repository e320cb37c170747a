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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fre {
namespace {

void MaxInto(Vector& acc, const Vector& v) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = Max(acc[j], v[j]);
}

void MinInto(Vector& acc, const Vector& v) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = Min(acc[j], v[j]);
}

}  // namespace

std::optional<std::size_t> RowClassification::FirstEmptySupport() const {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i].empty()) return i;
  }
  return std::nullopt;
}

bool RowClassification::InSupport(std::size_t row, std::size_t column) const {
  return std::binary_search(support[row].begin(), support[row].end(), column);
}

RowClassification ClassifyRows(const Instance& instance) {
  const std::size_t n = instance.size();
  RowClassification cls;
  cls.strict.resize(n);
  cls.tight.resize(n);
  cls.support.resize(n);
  cls.row_class.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Decimal& bi = instance.rhs()[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Decimal& aij = instance.a(i, j);
      if (bi < aij) {
        cls.strict[i].push_back(j);
        cls.support[i].push_back(j);
      } else if (aij == bi) {
        cls.tight[i].push_back(j);
        cls.support[i].push_back(j);
      }
    }
    const Decimal& aii = instance.a(i, i);
    if (bi < aii) {
      cls.row_class[i] = RowClass::kAbove;
      cls.above.push_back(i);
    } else if (aii == bi) {
      cls.row_class[i] = RowClass::kTight;
      cls.tight_rows.push_back(i);
    } else {
      cls.row_class[i] = RowClass::kBelow;
      cls.below.push_back(i);
    }
  }
  return cls;
}

bool Cell::empty() const {
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (upper[j] < lower[j]) return true;
  }
  return false;
}

bool Cell::Contains(const Vector& x) const {
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (x[j] < lower[j] || upper[j] < x[j]) return false;
  }
  return true;
}

bool Cell::Within(const Cell& other) const {
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (lower[j] < other.lower[j] || other.upper[j] < upper[j]) return false;
  }
  return true;
}

const Vector& ExtremalSet::Upper(std::size_t row, int variant) const {
  const RowExtremals& r = rows.at(row);
  if (variant == 1) return r.upper1;
  if (variant == 2 && r.kind != RowClass::kAbove) return r.upper2;
  throw std::out_of_range("no maximal solution of type " +
                          std::to_string(variant) + " for row " +
                          std::to_string(row + 1));
}

const Vector& ExtremalSet::Minimal(std::size_t row, std::size_t column) const {
  const auto& minimal = rows.at(row).minimal;
  auto it = std::lower_bound(
      minimal.begin(), minimal.end(), column,
      [](const auto& entry, std::size_t c) { return entry.first < c; });
  if (it == minimal.end() || it->first != column) {
    throw std::out_of_range("column " + std::to_string(column + 1) +
                            " is not in J_" + std::to_string(row + 1));
  }
  return it->second;
}

ExtremalSet ExtremalSolutions(const Instance& instance,
                              const RowClassification& cls) {
  const std::size_t n = instance.size();
  const Decimal zero = Decimal::Zero();
  const Decimal one = Decimal::One();
  ExtremalSet ext;
  ext.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    RowExtremals& r = ext.rows[i];
    const Decimal& bi = instance.rhs()[i];
    r.kind = cls.row_class[i];

    r.upper1.assign(n, one);
    r.upper1[i] = bi;

    if (r.kind != RowClass::kAbove) {
      r.upper2.assign(n, one);
      for (std::size_t j : cls.strict[i]) r.upper2[j] = bi;
    }
    if (r.kind != RowClass::kBelow) {
      r.lower.assign(n, zero);
      r.lower[i] = bi;
    } else {
      for (std::size_t j : cls.support[i]) {
        Vector v(n, zero);
        v[i] = bi;
        v[j] = bi;
        r.minimal.emplace_back(j, std::move(v));
      }
    }
  }
  return ext;
}

Vector BoundVectors::FixedLower() const {
  Vector out = lower_above;
  MaxInto(out, lower_tight);
  return out;
}

BoundVectors AggregateBounds(const ExtremalSet& ext,
                             const RowClassification& cls, std::size_t n) {
  BoundVectors bounds;
  bounds.lower_above.assign(n, Decimal::Zero());
  bounds.upper_above.assign(n, Decimal::One());
  bounds.lower_tight.assign(n, Decimal::Zero());
  for (std::size_t i : cls.above) {
    MaxInto(bounds.lower_above, ext.rows[i].lower);
    MinInto(bounds.upper_above, ext.rows[i].upper1);
  }
  for (std::size_t i : cls.tight_rows) {
    MaxInto(bounds.lower_tight, ext.rows[i].lower);
  }
  return bounds;
}

SelectorBounds ComputeSelectorBounds(const ExtremalSet& ext,
                                     const RowClassification& cls,
                                     const Triple& triple, std::size_t n) {
  if (triple.tight_pick.size() != cls.tight_rows.size() ||
      triple.below_pick.size() != cls.below.size() ||
      triple.minimal_pick.size() != cls.below.size()) {
    throw std::invalid_argument("selector shape does not match rows");
  }
  SelectorBounds out;
  out.upper_tight.assign(n, Decimal::One());
  out.upper_below.assign(n, Decimal::One());
  out.lower_minimal.assign(n, Decimal::Zero());
  auto check_variant = [](uint8_t v, std::size_t row) {
    if (v != 1 && v != 2) {
      throw std::invalid_argument("selector value " + std::to_string(v) +
                                  " for row " + std::to_string(row + 1) +
                                  " is not 1 or 2");
    }
  };
  for (std::size_t k = 0; k < cls.tight_rows.size(); ++k) {
    const std::size_t i = cls.tight_rows[k];
    check_variant(triple.tight_pick[k], i);
    MinInto(out.upper_tight, ext.Upper(i, triple.tight_pick[k]));
  }
  for (std::size_t k = 0; k < cls.below.size(); ++k) {
    const std::size_t i = cls.below[k];
    check_variant(triple.below_pick[k], i);
    MinInto(out.upper_below, ext.Upper(i, triple.below_pick[k]));
    const std::size_t j = triple.minimal_pick[k];
    if (!cls.InSupport(i, j)) {
      throw std::invalid_argument("column " + std::to_string(j + 1) +
                                  " is not in J_" + std::to_string(i + 1));
    }
    MaxInto(out.lower_minimal, ext.Minimal(i, j));
  }
  return out;
}

Cell CellOf(const BoundVectors& bounds, const SelectorBounds& selected) {
  Cell cell;
  cell.lower = bounds.FixedLower();
  MaxInto(cell.lower, selected.lower_minimal);
  cell.upper = bounds.upper_above;
  MinInto(cell.upper, selected.upper_tight);
  MinInto(cell.upper, selected.upper_below);
  return cell;
}

}  // namespace fre
