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

#ifndef FRE_TESTS_TEST_UTIL_HPP_
#define FRE_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fre/extremals.hpp"
#include "fre/model.hpp"

namespace fre::testing {

inline Decimal D(const char* text) { return Decimal::Parse(text); }

inline Vector V(std::initializer_list<const char*> items) {
  Vector out;
  for (const char* s : items) out.push_back(Decimal::Parse(s));
  return out;
}

inline Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
  Matrix out;
  for (const auto& r : rows) out.push_back(V(r));
  return out;
}

// 0-based index list from 1-based literals.
inline std::vector<std::size_t> Idx(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (std::size_t v : one_based) out.push_back(v - 1);
  return out;
}

// The ten-variable reference instance shipped in data/.
inline Instance Reference10() {
  return LoadInstance(std::string(FRE_DATA_DIR) + "/example1.json");
}

inline Instance Make(Matrix a, Vector b, Vector c,
                     Sense sense = Sense::kMinimize) {
  return Instance(std::move(a), std::move(b), std::move(c), sense);
}

// Cell of a selector triple computed straight from A and b, without the
// library's extremal machinery: every row contributes a lower bound of b_i at
// i (and at its picked column for rows with a_ii < b_i), and an upper bound
// of b_i at i (type 1 and a_ii > b_i rows) or at every column with
// a_ij > b_i (type 2).
inline Cell DirectCell(const Instance& inst, const Triple& t) {
  const std::size_t n = inst.size();
  Cell cell{Vector(n, Decimal::Zero()), Vector(n, Decimal::One())};
  std::size_t tight = 0, below = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Decimal& bi = inst.rhs()[i];
    const Decimal& aii = inst.a(i, i);
    cell.lower[i] = std::max(cell.lower[i], bi);
    int type = 1;
    if (aii < bi) {
      const std::size_t j = t.minimal_pick[below];
      cell.lower[j] = std::max(cell.lower[j], bi);
      type = t.below_pick[below++];
    } else if (aii == bi) {
      type = t.tight_pick[tight++];
    }
    for (std::size_t j = 0; j < n; ++j) {
      const bool capped = type == 1 ? j == i : inst.a(i, j) > bi;
      if (capped) cell.upper[j] = std::min(cell.upper[j], bi);
    }
  }
  return cell;
}

// Every selector triple whose direct cell is nonempty, in ascending order.
// Domains are the full ones: types {1,2} and columns with a_ij >= b_i.
inline std::vector<std::pair<Triple, Cell>> DirectAdmissible(
    const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<std::vector<std::size_t>> columns;
  std::size_t tight = 0, below = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Decimal& bi = inst.rhs()[i];
    if (inst.a(i, i) < bi) {
      std::vector<std::size_t> js;
      for (std::size_t j = 0; j < n; ++j) {
        if (inst.a(i, j) >= bi) js.push_back(j);
      }
      columns.push_back(js);
      ++below;
    } else if (inst.a(i, i) == bi) {
      ++tight;
    }
  }
  std::vector<std::pair<Triple, Cell>> out;
  Triple t;
  t.minimal_pick.assign(below, 0);
  t.tight_pick.assign(tight, 1);
  t.below_pick.assign(below, 1);
  const std::size_t slots = below + tight + below;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == slots) {
      Cell c = DirectCell(inst, t);
      bool ok = true;
      for (std::size_t j = 0; j < n; ++j) ok = ok && c.lower[j] <= c.upper[j];
      if (ok) out.emplace_back(t, std::move(c));
      return;
    }
    if (k < below) {
      for (std::size_t j : columns[k]) {
        t.minimal_pick[k] = j;
        walk(k + 1);
      }
      return;
    }
    uint8_t& slot = k < below + tight ? t.tight_pick[k - below]
                                      : t.below_pick[k - below - tight];
    for (uint8_t v : {uint8_t{1}, uint8_t{2}}) {
      slot = v;
      walk(k + 1);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace fre::testing

#endif  // FRE_TESTS_TEST_UTIL_HPP_
