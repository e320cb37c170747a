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

// Seeded random instances and graphs. The same parameters always produce
// the same output on a given standard library.

#ifndef FRE_GENERATE_HPP_
#define FRE_GENERATE_HPP_

#include <cstddef>
#include <cstdint>

#include "fre/model.hpp"
#include "fre/vertex_cover.hpp"

namespace fre {

struct FreParams {
  std::size_t n = 3;
  // Probability that an entry of A is nonzero.
  double density = 1.0;
  // Entries of A, b and c use this many fractional digits.
  int decimals = 2;
  // Draw x on the grid and set b = A (x) x, so the instance is feasible.
  bool planted = false;
  Sense sense = Sense::kMinimize;
  uint64_t seed = 0;
};

// Costs are drawn from [-10, 10]. Throws std::invalid_argument on n = 0,
// density outside [0,1] or decimals outside [0,6].
Instance RandomFre(const FreParams& params);

// A in {0,1} with the given density, b = 0, costs from [-10, 10].
Instance RandomBinaryFre(std::size_t n, double density, Sense sense,
                         uint64_t seed);

// Each of the n(n-1)/2 edges present independently with probability
// `density`.
Graph RandomGraph(std::size_t n, double density, uint64_t seed);

}  // namespace fre

#endif  // FRE_GENERATE_HPP_
