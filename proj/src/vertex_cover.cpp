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

#include "fre/vertex_cover.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fre {
namespace {

using nlohmann::json;

std::string Join(const std::vector<std::size_t>& items) {
  std::string out;
  for (std::size_t v : items) {
    if (!out.empty()) out += ",";
    out += std::to_string(v + 1);
  }
  return out;
}

std::size_t ParseCount(const std::string& token, const std::string& line) {
  std::size_t pos = 0;
  long long value = -1;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || value < 0) {
    throw InputError("bad number '" + token + "' in line: " + line);
  }
  return static_cast<std::size_t>(value);
}

void Search(const Graph& g, std::size_t v, std::vector<uint8_t>& pick,
            std::size_t chosen, std::vector<uint8_t>& best,
            std::size_t& best_size, uint64_t& visited) {
  if (v == g.size()) {
    ++visited;
    if (best.empty() || chosen > best_size) {
      best = pick;
      best_size = chosen;
    }
    return;
  }
  pick[v] = 1;
  Search(g, v + 1, pick, chosen, best, best_size, visited);
  for (std::size_t u = 0; u < v; ++u) {
    if (pick[u] == 2 && g.Adjacent(u, v)) {
      pick[v] = 1;
      return;
    }
  }
  pick[v] = 2;
  Search(g, v + 1, pick, chosen + 1, best, best_size, visited);
  pick[v] = 1;
}

}  // namespace

Graph::Graph(std::size_t n,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : adjacent_(n, std::vector<bool>(n, false)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u + 1) + "," +
                       std::to_string(v + 1) + ") names a vertex beyond " +
                       std::to_string(n));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u + 1));
    }
    adjacent_[u][v] = adjacent_[v][u] = true;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adjacent_[u][v]) edges_.emplace_back(u, v);
    }
  }
}

Graph Graph::FromAdjacency(const std::vector<std::vector<int>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    if (adjacency[u].size() != n) throw InputError("adjacency is not square");
    for (std::size_t v = 0; v < n; ++v) {
      const int a = adjacency[u][v];
      if (a != 0 && a != 1) throw InputError("adjacency entries must be 0 or 1");
      if (u == v && a == 1) {
        throw InputError("self-loop at vertex " + std::to_string(u + 1));
      }
      if (a != adjacency[v][u]) throw InputError("adjacency is not symmetric");
      if (a == 1 && u < v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw InputError("duplicate problem line");
      // "p edge n m" or "p n m".
      const std::size_t first = tok.size() == 4 ? 2 : 1;
      if (tok.size() != first + 2) throw InputError("bad problem line: " + line);
      n = ParseCount(tok[first], line);
      ParseCount(tok[first + 1], line);
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw InputError("edge before problem line");
      if (tok.size() != 3) throw InputError("bad edge line: " + line);
      const std::size_t u = ParseCount(tok[1], line);
      const std::size_t v = ParseCount(tok[2], line);
      if (u == 0 || v == 0) throw InputError("vertices are 1-based: " + line);
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw InputError("unrecognized line: " + line);
    }
  }
  if (!have_header) throw InputError("missing problem line");
  return Graph(n, edges);
}

Graph ParseAdjacencyJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph document: ") + e.what());
  }
  const json* adjacency = &doc;
  if (doc.is_object()) {
    if (!doc.contains("adjacency")) throw InputError("graph lacks \"adjacency\"");
    adjacency = &doc.at("adjacency");
  }
  if (!adjacency->is_array()) throw InputError("adjacency must be an array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : *adjacency) {
    if (!row.is_array()) throw InputError("adjacency rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError("adjacency entries must be 0 or 1");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  if (doc.is_object() && doc.contains("n") &&
      doc.at("n") != json(rows.size())) {
    throw InputError("\"n\" does not match the adjacency size");
  }
  return Graph::FromAdjacency(rows);
}

Graph ParseGraph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos &&
      (text[first] == '{' || text[first] == '[')) {
    return ParseAdjacencyJson(text);
  }
  return ParseDimacs(text);
}

Graph LoadGraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGraph(buf.str());
}

std::string GraphToDimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.size()) + " " +
                    std::to_string(g.edges().size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

bool IsCover(const Graph& g, const std::vector<std::size_t>& cover) {
  std::vector<bool> in(g.size(), false);
  for (std::size_t v : cover) {
    if (v >= g.size()) return false;
    in[v] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const auto& e) { return in[e.first] || in[e.second]; });
}

Instance GraphToInstance(const Graph& g) {
  const std::size_t n = g.size();
  Matrix a(n, Vector(n, Decimal::Zero()));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = Decimal::One();
  return Instance(std::move(a), Vector(n, Decimal::Zero()),
                  Vector(n, Decimal::One()), Sense::kMaximize);
}

std::pair<std::vector<uint8_t>, uint64_t> SpecializedSelector(const Graph& g) {
  std::vector<uint8_t> pick(g.size(), 1);
  std::vector<uint8_t> best;
  std::size_t best_size = 0;
  uint64_t visited = 0;
  Search(g, 0, pick, 0, best, best_size, visited);
  return {best, visited};
}

CoverResult SolveCover(const Graph& g, const CoverOptions& options) {
  const Instance instance = GraphToInstance(g);
  SolveOptions solve_options;
  solve_options.threads = options.threads;
  const Solution solution = Solve(instance, solve_options);
  if (solution.status != Status::kOptimal) {
    // The all-zero vector is always feasible, so this cannot happen.
    throw std::logic_error("cover instance reported infeasible");
  }
  CoverResult result;
  result.x_star = solution.best->x;
  result.selector = solution.best->triple.tight_pick;
  result.stats = solution.stats;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (result.x_star[j].IsZero()) result.cover.push_back(j);
  }
  result.size = result.cover.size();
  if (options.specialized) {
    auto [selector, visited] = SpecializedSelector(g);
    result.specialized_visited = visited;
    if (selector != result.selector) {
      throw std::logic_error("direct enumeration disagrees with the solver");
    }
  }
  return result;
}

bool StructureReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const StructureCheck& c) { return c.passed; });
}

StructureReport VerifyStructure(const CoverResult& result, const Graph& g) {
  const Instance instance = GraphToInstance(g);
  const Analysis analysis = Analyze(instance);
  const std::size_t n = g.size();
  StructureReport report;

  {
    StructureCheck c{"rows", true, ""};
    std::vector<std::size_t> odd = analysis.cls.above;
    odd.insert(odd.end(), analysis.cls.below.begin(), analysis.cls.below.end());
    std::sort(odd.begin(), odd.end());
    if (!odd.empty() || analysis.cls.tight_rows.size() != n) {
      c.passed = false;
      c.detail = "rows not tight: " + Join(odd);
    }
    report.checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"bounds", true, ""};
    const Vector lower = analysis.bounds.FixedLower();
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < n; ++j) {
      if (!lower[j].IsZero()) nonzero.push_back(j);
    }
    if (!nonzero.empty()) {
      c.passed = false;
      c.detail = "fixed lower bound nonzero at " + Join(nonzero);
    } else if (result.stats.admissible != result.stats.full_space ||
               result.stats.enumerated != result.stats.full_space) {
      c.passed = false;
      c.detail = std::to_string(result.stats.admissible) + " of " +
                 std::to_string(result.stats.full_space) +
                 " selectors admissible";
    }
    report.checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"type2", true, ""};
    const bool any = std::find(result.selector.begin(), result.selector.end(),
                               2) != result.selector.end();
    if (!g.edges().empty() && !any) {
      c.passed = false;
      c.detail = "no vertex of type 2";
    }
    report.checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"indep", true, ""};
    for (auto [u, v] : g.edges()) {
      if (result.selector.at(u) == 2 && result.selector.at(v) == 2) {
        c.passed = false;
        c.detail += (c.detail.empty() ? "" : " ") + std::string("(") +
                    std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    StructureCheck c{"masks", true, ""};
    const MaskMatrices masks = BuildMasks(instance, analysis.ext, analysis.cls);
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k < analysis.cls.tight_rows.size(); ++k) {
      const std::size_t i = analysis.cls.tight_rows[k];
      for (std::size_t j = 0; j < n; ++j) {
        const Decimal one_minus_identity = i == j ? Decimal::Zero() : Decimal::One();
        const Decimal one_minus_adjacency =
            g.Adjacent(i, j) ? Decimal::Zero() : Decimal::One();
        if (masks.tight_type1[k].values[j] != one_minus_identity ||
            masks.tight_type2[k].values[j] != one_minus_adjacency) {
          bad.push_back(i);
          break;
        }
      }
    }
    if (!bad.empty()) {
      c.passed = false;
      c.detail = "mask rows differ at " + Join(bad);
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace fre
