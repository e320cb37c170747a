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

// Minimum vertex cover as a max-min equation system.
//
// With A the adjacency matrix, b = 0 and c = 1, row i reads
// max_j min{a_ij, x_i, x_j} = 0: no edge may have both ends positive.
// Maximizing sum x over that set and reading x_j = 1 - [j in cover] gives a
// minimum cover. Every diagonal entry equals b_i = 0, so each row is tight,
// the fixed bounds are trivial and the solver only chooses a type per row.
// A vertex of type 2 keeps x = 1 and forces its neighbors to 0; one of
// type 1 is forced to 0 itself.

#ifndef FRE_VERTEX_COVER_HPP_
#define FRE_VERTEX_COVER_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fre/model.hpp"
#include "fre/solver.hpp"

namespace fre {

// Simple undirected graph, vertices 0..n-1.
class Graph {
 public:
  // Throws InputError on self-loops or endpoints out of range. Repeated
  // edges (in either orientation) are merged.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  // Throws InputError unless `adjacency` is square, 0/1, symmetric and has a
  // zero diagonal.
  static Graph FromAdjacency(const std::vector<std::vector<int>>& adjacency);

  std::size_t size() const { return adjacent_.size(); }
  bool Adjacent(std::size_t u, std::size_t v) const { return adjacent_[u][v]; }
  // Each edge once, as (u, v) with u < v, ascending.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<bool>> adjacent_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// "p <n> <m>" or "p edge <n> <m>", then "e <u> <v>" lines with 1-based
// vertices; "c" lines and blank lines are ignored.
Graph ParseDimacs(std::string_view text);
// {"n": 3, "adjacency": [[0,1,0],...]} or a bare adjacency array.
Graph ParseAdjacencyJson(std::string_view text);
// Picks the JSON form when the first non-blank character is '{' or '['.
Graph ParseGraph(std::string_view text);
Graph LoadGraph(const std::filesystem::path& path);
std::string GraphToDimacs(const Graph& g);

bool IsCover(const Graph& g, const std::vector<std::size_t>& cover);

Instance GraphToInstance(const Graph& g);

struct CoverOptions {
  // Also run the direct enumerator, which skips selectors giving type 2 to
  // two adjacent vertices, and require the same answer.
  bool specialized = false;
  unsigned threads = 0;
};

struct CoverResult {
  std::vector<std::size_t> cover;  // ascending
  std::size_t size = 0;
  Vector x_star;
  std::vector<uint8_t> selector;  // type per vertex
  SolveStatistics stats;
  // Selectors visited by the direct enumerator; 0 unless it ran.
  uint64_t specialized_visited = 0;
};

// Throws std::logic_error if the specialized enumerator disagrees.
CoverResult SolveCover(const Graph& g, const CoverOptions& options = {});

// Direct enumeration over selectors whose type-2 vertices are independent,
// in lexicographic order; returns the first optimum and the visit count.
std::pair<std::vector<uint8_t>, uint64_t> SpecializedSelector(const Graph& g);

struct StructureCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // offending indices when failed
};

struct StructureReport {
  std::vector<StructureCheck> checks;
  bool passed() const;
};

// The five structural facts of this regime:
//   rows    every row is tight
//   bounds  the fixed lower bound is zero and every selector is admissible
//   type2   some vertex has type 2 when the graph has an edge
//   indep   type-2 vertices are pairwise nonadjacent
//   masks   type-1 rows are 1 - identity, type-2 rows are 1 - adjacency
StructureReport VerifyStructure(const CoverResult& result, const Graph& g);

}  // namespace fre

#endif  // FRE_VERTEX_COVER_HPP_
