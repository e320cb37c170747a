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

#include "fre/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace fre {
namespace {

constexpr uint64_t kMaxSpace = uint64_t{1} << 63;

struct ChunkResult {
  std::optional<Candidate> best;
  uint64_t enumerated = 0;
  uint64_t admissible = 0;
};

ChunkResult SolveChunk(const Analysis& analysis, const TripleSpace& space,
                       const Vector& costs, Sense sense, uint64_t begin,
                       uint64_t end) {
  ChunkResult out;
  for (uint64_t index = begin; index < end; ++index) {
    Triple triple = space.At(index);
    Cell cell = CellOfTriple(analysis, triple);
    ++out.enumerated;
    if (cell.empty()) continue;
    ++out.admissible;
    Candidate c = MakeCandidate(std::move(triple), std::move(cell), costs, sense);
    if (!out.best || Better(c, *out.best, sense)) out.best = std::move(c);
  }
  return out;
}

}  // namespace

unsigned EffectiveThreads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("FRE_THREADS")) {
    unsigned value = 0;
    const char* last = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, last, value);
    if (ec == std::errc() && ptr == last && value > 0) return value;
  }
  return 1;
}

Analysis Analyze(const Instance& instance) {
  Analysis a;
  a.cls = ClassifyRows(instance);
  a.ext = ExtremalSolutions(instance, a.cls);
  a.bounds = AggregateBounds(a.ext, a.cls, instance.size());
  return a;
}

std::optional<Verdict> GateFeasibility(const Analysis& analysis) {
  if (auto row = analysis.cls.FirstEmptySupport()) {
    return Verdict{InfeasibilityCause::kEmptySupport, *row,
                   "row " + std::to_string(*row + 1) +
                       " has no coefficient reaching its right-hand side"};
  }
  const Vector lower = analysis.bounds.FixedLower();
  const Vector& upper = analysis.bounds.upper_above;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (upper[j] < lower[j]) {
      return Verdict{InfeasibilityCause::kBoundConflict, j,
                     "fixed lower bound " + lower[j].ToString() +
                         " exceeds fixed upper bound " + upper[j].ToString() +
                         " at x" + std::to_string(j + 1)};
    }
  }
  return std::nullopt;
}

TripleSpace::TripleSpace(const Domains& domains) {
  auto grow = [this](std::size_t radix) {
    if (radix == 0) {
      size_ = 0;
      return;
    }
    if (size_ != 0 && size_ > kMaxSpace / radix) {
      throw std::length_error("selector space exceeds 2^63 triples");
    }
    size_ *= radix;
  };
  for (const auto& d : domains.minimal) {
    minimal_.push_back(&d);
    grow(d.size());
  }
  for (const auto& d : domains.tight) {
    tight_.push_back(&d);
    grow(d.size());
  }
  for (const auto& d : domains.below) {
    below_.push_back(&d);
    grow(d.size());
  }
}

Triple TripleSpace::At(uint64_t index) const {
  if (index >= size_) throw std::out_of_range("triple index out of range");
  Triple t;
  t.minimal_pick.resize(minimal_.size());
  t.tight_pick.resize(tight_.size());
  t.below_pick.resize(below_.size());
  // Last digit varies fastest.
  for (std::size_t k = below_.size(); k-- > 0;) {
    const auto& d = *below_[k];
    t.below_pick[k] = d[index % d.size()];
    index /= d.size();
  }
  for (std::size_t k = tight_.size(); k-- > 0;) {
    const auto& d = *tight_[k];
    t.tight_pick[k] = d[index % d.size()];
    index /= d.size();
  }
  for (std::size_t k = minimal_.size(); k-- > 0;) {
    const auto& d = *minimal_[k];
    t.minimal_pick[k] = d[index % d.size()];
    index /= d.size();
  }
  return t;
}

Cell CellOfTriple(const Analysis& analysis, const Triple& triple) {
  const std::size_t n = analysis.bounds.upper_above.size();
  return CellOf(analysis.bounds,
                ComputeSelectorBounds(analysis.ext, analysis.cls, triple, n));
}

Candidate MakeCandidate(Triple triple, Cell cell, const Vector& costs,
                        Sense sense) {
  Candidate c;
  c.x.resize(costs.size());
  for (std::size_t j = 0; j < costs.size(); ++j) {
    const bool nonnegative = !costs[j].IsNegative();
    const bool take_lower = (sense == Sense::kMinimize) == nonnegative;
    c.x[j] = take_lower ? cell.lower[j] : cell.upper[j];
  }
  c.objective = Objective(costs, c.x);
  c.triple = std::move(triple);
  c.cell = std::move(cell);
  return c;
}

bool Better(const Candidate& a, const Candidate& b, Sense sense) {
  if (a.objective != b.objective) {
    return sense == Sense::kMinimize ? a.objective < b.objective
                                     : b.objective < a.objective;
  }
  return a.triple < b.triple;
}

uint64_t EnumerateAdmissible(
    const Analysis& analysis, const Domains& domains,
    const std::function<void(const Triple&, const Cell&)>& visit) {
  const TripleSpace space(domains);
  for (uint64_t index = 0; index < space.size(); ++index) {
    const Triple triple = space.At(index);
    const Cell cell = CellOfTriple(analysis, triple);
    if (!cell.empty()) visit(triple, cell);
  }
  return space.size();
}

Solution Solve(const Instance& instance, const SolveOptions& options) {
  Solution solution;
  const Analysis analysis = Analyze(instance);
  solution.reduction = InitialState(instance, analysis.ext, analysis.cls);
  solution.stats.full_space = solution.reduction.counts().total();
  solution.stats.search_space = solution.stats.full_space;

  if (auto verdict = GateFeasibility(analysis)) {
    solution.verdict = std::move(verdict);
    return solution;
  }
  if (options.apply_rules) {
    solution.reduction =
        Reduce(instance, analysis.ext, analysis.cls, analysis.bounds);
    solution.stats.search_space = solution.reduction.counts().total();
    if (solution.reduction.verdict) {
      solution.verdict = solution.reduction.verdict;
      return solution;
    }
  }

  const TripleSpace space(solution.reduction.domains);
  const uint64_t total = space.size();
  const unsigned threads = static_cast<unsigned>(
      std::min<uint64_t>(EffectiveThreads(options.threads),
                         std::max<uint64_t>(total, 1)));
  std::vector<ChunkResult> chunks(threads);
  auto run = [&](unsigned t) {
    const uint64_t share = total / threads;
    const uint64_t extra = total % threads;
    const uint64_t begin = share * t + std::min<uint64_t>(t, extra);
    const uint64_t end = begin + share + (t < extra ? 1 : 0);
    chunks[t] = SolveChunk(analysis, space, instance.costs(), instance.sense(),
                           begin, end);
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(run, t);
    for (auto& w : workers) w.join();
  }
  for (auto& chunk : chunks) {
    solution.stats.enumerated += chunk.enumerated;
    solution.stats.admissible += chunk.admissible;
    if (chunk.best &&
        (!solution.best ||
         Better(*chunk.best, *solution.best, instance.sense()))) {
      solution.best = std::move(chunk.best);
    }
  }
  if (solution.best) {
    solution.status = Status::kOptimal;
  } else {
    solution.verdict = Verdict{InfeasibilityCause::kNoAdmissibleTriple, 0,
                               "no selector triple yields a nonempty cell"};
  }
  return solution;
}

Region FeasibleRegion(const Instance& instance, bool prune_dominated,
                      const SolveOptions& options) {
  Region region;
  const Analysis analysis = Analyze(instance);
  if (auto verdict = GateFeasibility(analysis)) {
    region.verdict = std::move(verdict);
    return region;
  }
  Domains domains = InitialDomains(analysis.cls);
  if (options.apply_rules) {
    ReductionState state =
        Reduce(instance, analysis.ext, analysis.cls, analysis.bounds);
    if (state.verdict) {
      region.verdict = state.verdict;
      return region;
    }
    domains = std::move(state.domains);
  }
  EnumerateAdmissible(analysis, domains,
                      [&](const Triple& triple, const Cell& cell) {
                        for (const auto& seen : region.cells) {
                          if (seen.cell == cell) return;
                        }
                        region.cells.push_back(RegionCell{triple, cell});
                      });
  if (region.cells.empty()) {
    region.verdict = Verdict{InfeasibilityCause::kNoAdmissibleTriple, 0,
                             "no selector triple yields a nonempty cell"};
    return region;
  }
  if (prune_dominated) {
    // Cells are pairwise distinct here, so Within() is strict containment.
    std::vector<bool> dominated(region.cells.size(), false);
    for (std::size_t k = 0; k < region.cells.size(); ++k) {
      for (std::size_t m = 0; m < region.cells.size() && !dominated[k]; ++m) {
        dominated[k] =
            m != k && region.cells[k].cell.Within(region.cells[m].cell);
      }
    }
    std::vector<RegionCell> kept;
    for (std::size_t k = 0; k < region.cells.size(); ++k) {
      if (!dominated[k]) kept.push_back(std::move(region.cells[k]));
    }
    region.cells = std::move(kept);
  }
  return region;
}

}  // namespace fre
