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

#include "fre/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fre {
namespace {

constexpr std::size_t kMaxExamples = 8;

void SortUnique(std::vector<Decimal>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

std::vector<Decimal> GridValues(const Instance& instance) {
  std::vector<Decimal> values = {Decimal::Zero(), Decimal::One()};
  values.insert(values.end(), instance.rhs().begin(), instance.rhs().end());
  SortUnique(values);
  return values;
}

GridResult GridOptimum(const Instance& instance, uint64_t budget) {
  const std::vector<Decimal> values = GridValues(instance);
  const std::size_t n = instance.size();
  uint64_t points = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (points > budget / values.size()) {
      throw std::length_error("grid exceeds the point budget");
    }
    points *= values.size();
  }
  GridResult result;
  result.points = points;
  std::vector<std::size_t> digits(n, 0);
  Vector x(n, values[0]);
  for (uint64_t p = 0; p < points; ++p) {
    if (IsFeasible(instance, x)) {
      ++result.feasible_points;
      const Decimal value = Objective(instance.costs(), x);
      const bool better =
          !result.feasible ||
          (instance.sense() == Sense::kMinimize ? value < result.objective
                                                : result.objective < value);
      if (better) {
        result.feasible = true;
        result.objective = value;
        result.x = x;
      }
    }
    // Odometer step, last coordinate fastest.
    for (std::size_t j = n; j-- > 0;) {
      if (++digits[j] < values.size()) {
        x[j] = values[digits[j]];
        break;
      }
      digits[j] = 0;
      x[j] = values[0];
    }
  }
  return result;
}

SampleReport SampleFeasibility(const Instance& instance,
                               const std::vector<Cell>& cells, uint64_t k,
                               uint64_t seed, const SampleOptions& options) {
  const std::size_t n = instance.size();
  const int digits = std::max(2, instance.precision());
  const int64_t steps = [&] {
    int64_t s = 1;
    for (int d = 0; d < digits; ++d) s *= 10;
    return s;
  }();
  const Decimal quantum = Decimal::FromScaled(1, digits);

  std::vector<Decimal> boundary = GridValues(instance);
  for (const Cell& c : cells) {
    boundary.insert(boundary.end(), c.lower.begin(), c.lower.end());
    boundary.insert(boundary.end(), c.upper.begin(), c.upper.end());
  }
  SortUnique(boundary);
  const std::size_t base = boundary.size();
  for (std::size_t k2 = 0; k2 < base; ++k2) {
    const Decimal below = boundary[k2] - quantum;
    const Decimal above = boundary[k2] + quantum;
    if (!below.IsNegative()) boundary.push_back(below);
    if (!(Decimal::One() < above)) boundary.push_back(above);
  }
  SortUnique(boundary);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> uniform(0, steps);
  std::uniform_int_distribution<std::size_t> pick(0, boundary.size() - 1);
  std::bernoulli_distribution snap(options.boundary_probability);

  SampleReport report;
  Vector x(n);
  for (uint64_t s = 0; s < k; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = snap(rng) ? boundary[pick(rng)]
                       : Decimal::FromScaled(uniform(rng), digits);
    }
    const bool member = IsFeasible(instance, x);
    const bool in_union = std::any_of(
        cells.begin(), cells.end(), [&](const Cell& c) { return c.Contains(x); });
    ++report.samples;
    if (member) ++report.members;
    if (member != in_union) {
      ++report.disagreements;
      if (report.examples.size() < kMaxExamples) {
        report.examples.push_back(Disagreement{x, member, in_union});
      }
    }
  }
  return report;
}

BruteCover BruteForceCover(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kMaxBruteVertices) {
    throw std::length_error("brute-force cover is limited to " +
                            std::to_string(kMaxBruteVertices) + " vertices");
  }
  auto covers = [&](uint32_t mask) {
    for (auto [u, v] : g.edges()) {
      if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) return false;
    }
    return true;
  };
  for (std::size_t size = 0; size <= n; ++size) {
    // Smallest mask with `size` bits, then Gosper's next-combination step.
    uint32_t mask = size == 0 ? 0u : (1u << size) - 1u;
    const uint32_t limit = 1u << n;
    while (mask < limit) {
      if (covers(mask)) {
        BruteCover out;
        out.size = size;
        for (std::size_t v = 0; v < n; ++v) {
          if ((mask >> v) & 1u) out.cover.push_back(v);
        }
        return out;
      }
      if (mask == 0) break;
      const uint32_t low = mask & (~mask + 1u);
      const uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  throw std::logic_error("the full vertex set always covers");
}

}  // namespace fre
