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

#include "fre/generate.hpp"

#include <random>
#include <stdexcept>

namespace fre {
namespace {

void CheckShape(std::size_t n, double density) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0,1]");
  }
}

int64_t Pow10(int digits) {
  int64_t p = 1;
  for (int d = 0; d < digits; ++d) p *= 10;
  return p;
}

Vector RandomCosts(std::size_t n, int decimals, std::mt19937_64& rng) {
  const int64_t scale = Pow10(decimals);
  std::uniform_int_distribution<int64_t> cost(-10 * scale, 10 * scale);
  Vector c(n);
  for (auto& v : c) v = Decimal::FromScaled(cost(rng), decimals);
  return c;
}

}  // namespace

Instance RandomFre(const FreParams& params) {
  CheckShape(params.n, params.density);
  if (params.decimals < 0 || params.decimals > 6) {
    throw std::invalid_argument("decimals must lie in [0,6]");
  }
  const std::size_t n = params.n;
  const int64_t scale = Pow10(params.decimals);
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<int64_t> unit(0, scale);
  std::bernoulli_distribution present(params.density);
  auto draw = [&] { return Decimal::FromScaled(unit(rng), params.decimals); };

  Matrix a(n, Vector(n));
  for (auto& row : a) {
    for (auto& v : row) v = present(rng) ? draw() : Decimal::Zero();
  }
  Vector b(n);
  if (params.planted) {
    Vector x(n);
    for (auto& v : x) v = draw();
    for (std::size_t i = 0; i < n; ++i) {
      Decimal best;
      for (std::size_t j = 0; j < n; ++j) {
        best = Max(best, Min(a[i][j], Min(x[i], x[j])));
      }
      b[i] = best;
    }
  } else {
    for (auto& v : b) v = draw();
  }
  Vector c = RandomCosts(n, params.decimals, rng);
  return Instance(std::move(a), std::move(b), std::move(c), params.sense);
}

Instance RandomBinaryFre(std::size_t n, double density, Sense sense,
                         uint64_t seed) {
  CheckShape(n, density);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(density);
  Matrix a(n, Vector(n));
  for (auto& row : a) {
    for (auto& v : row) v = present(rng) ? Decimal::One() : Decimal::Zero();
  }
  Vector c = RandomCosts(n, 2, rng);
  return Instance(std::move(a), Vector(n, Decimal::Zero()), std::move(c),
                  sense);
}

Graph RandomGraph(std::size_t n, double density, uint64_t seed) {
  CheckShape(n, density);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(density);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (present(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace fre
