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

#include "fre/report.hpp"

#include <sstream>

namespace fre {
namespace {

using nlohmann::json;

json Indices(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

template <typename T>
json Pairs(const std::vector<std::size_t>& rows, const std::vector<T>& values,
           bool values_are_indices) {
  json out = json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t v = values[k];
    out.push_back(json::array({rows[k] + 1, values_are_indices ? v + 1 : v}));
  }
  return out;
}

json CountsToJson(const Cardinalities& c) {
  return json{{"tight", c.tight},
              {"below", c.below},
              {"minimal", c.minimal},
              {"total", c.total()}};
}

std::string Braces(const std::vector<std::size_t>& values, bool one_based) {
  std::string out = "{";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values[k] + (one_based ? 1 : 0));
  }
  return out + "}";
}

std::vector<std::size_t> Widen(const std::vector<uint8_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

json DisplayVector(const Vector& v) {
  json out = json::array();
  for (const auto& d : v) out.push_back(d.ToFixed(kDisplayDigits));
  return out;
}

json TripleToJson(const RowClassification& cls, const Triple& t) {
  return json{{"minimal", Pairs(cls.below, t.minimal_pick, true)},
              {"tight", Pairs(cls.tight_rows, t.tight_pick, false)},
              {"below", Pairs(cls.below, t.below_pick, false)}};
}

json CellToJson(const Cell& cell) {
  return json{{"lower", VectorToJson(cell.lower)},
              {"upper", VectorToJson(cell.upper)}};
}

json VerdictToJson(const Verdict& verdict) {
  json out{{"cause", std::string(CauseName(verdict.cause))},
           {"detail", verdict.detail}};
  if (verdict.cause != InfeasibilityCause::kNoAdmissibleTriple) {
    out["index"] = verdict.row + 1;
  }
  return out;
}

json TraceToJson(const ReductionState& state) {
  json out = json::array();
  for (const TraceEntry& e : state.trace) {
    const bool column = e.rule == 3 || e.rule >= 6;
    out.push_back(json{{"rule", e.rule},
                       {"target", e.target + 1},
                       {"removed", column ? e.removed + 1 : e.removed},
                       {"witness", e.witness + 1},
                       {"mask", MaskLabel(e)}});
  }
  return out;
}

json DomainsToJson(const RowClassification& cls, const Domains& d) {
  json tight = json::array();
  for (std::size_t k = 0; k < cls.tight_rows.size(); ++k) {
    tight.push_back(json{{"row", cls.tight_rows[k] + 1}, {"types", d.tight[k]}});
  }
  json below = json::array();
  for (std::size_t k = 0; k < cls.below.size(); ++k) {
    below.push_back(json{{"row", cls.below[k] + 1},
                         {"types", d.below[k]},
                         {"columns", Indices(d.minimal[k])}});
  }
  return json{{"tight", std::move(tight)}, {"below", std::move(below)}};
}

json SolutionToJson(const Instance& instance, const Solution& solution,
                    bool with_trace) {
  json out;
  out["status"] = solution.status == Status::kOptimal ? "optimal" : "infeasible";
  out["sense"] = std::string(SenseName(instance.sense()));
  if (solution.best) {
    const RowClassification cls = ClassifyRows(instance);
    out["objective"] = solution.best->objective.ToString();
    out["objective_display"] = solution.best->objective.ToFixed(kDisplayDigits);
    out["x"] = VectorToJson(solution.best->x);
    out["x_display"] = DisplayVector(solution.best->x);
    out["selectors"] = TripleToJson(cls, solution.best->triple);
    out["cell"] = CellToJson(solution.best->cell);
  }
  if (solution.verdict) out["infeasibility"] = VerdictToJson(*solution.verdict);
  out["statistics"] = json{{"full_space", solution.stats.full_space},
                           {"search_space", solution.stats.search_space},
                           {"enumerated", solution.stats.enumerated},
                           {"admissible", solution.stats.admissible}};
  if (with_trace) {
    out["trace"] = TraceToJson(solution.reduction);
    json stages = json::array();
    for (const Stage& s : solution.reduction.history) {
      stages.push_back(json{{"stage", s.name}, {"counts", CountsToJson(s.counts)}});
    }
    out["stages"] = std::move(stages);
  }
  return out;
}

json RegionToJson(const Instance& instance, const Region& region) {
  const RowClassification cls = ClassifyRows(instance);
  json cells = json::array();
  for (const RegionCell& rc : region.cells) {
    json c = CellToJson(rc.cell);
    c["selectors"] = TripleToJson(cls, rc.triple);
    cells.push_back(std::move(c));
  }
  json out{{"status", region.cells.empty() ? "infeasible" : "feasible"},
           {"cells", std::move(cells)}};
  if (region.verdict) out["infeasibility"] = VerdictToJson(*region.verdict);
  return out;
}

json ExtremalsToJson(const Instance& instance) {
  const RowClassification cls = ClassifyRows(instance);
  const ExtremalSet ext = ExtremalSolutions(instance, cls);
  const BoundVectors bounds =
      AggregateBounds(ext, cls, instance.size());
  json rows = json::array();
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const RowExtremals& r = ext.rows[i];
    json row{{"row", i + 1},
             {"class", r.kind == RowClass::kAbove   ? "above"
                       : r.kind == RowClass::kTight ? "tight"
                                                    : "below"},
             {"strict", Indices(cls.strict[i])},
             {"tight", Indices(cls.tight[i])},
             {"support", Indices(cls.support[i])},
             {"upper1", VectorToJson(r.upper1)}};
    if (!r.upper2.empty()) row["upper2"] = VectorToJson(r.upper2);
    if (!r.lower.empty()) row["lower"] = VectorToJson(r.lower);
    if (!r.minimal.empty()) {
      json minimal = json::array();
      for (const auto& [j, v] : r.minimal) {
        minimal.push_back(json{{"column", j + 1}, {"vector", VectorToJson(v)}});
      }
      row["minimal"] = std::move(minimal);
    }
    rows.push_back(std::move(row));
  }
  return json{{"above", Indices(cls.above)},
              {"tight", Indices(cls.tight_rows)},
              {"below", Indices(cls.below)},
              {"rows", std::move(rows)},
              {"lower_above", VectorToJson(bounds.lower_above)},
              {"upper_above", VectorToJson(bounds.upper_above)},
              {"lower_tight", VectorToJson(bounds.lower_tight)},
              {"fixed_lower", VectorToJson(bounds.FixedLower())}};
}

json CoverToJson(const CoverResult& result, const StructureReport& checks) {
  json list = json::array();
  for (const StructureCheck& c : checks.checks) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    list.push_back(std::move(entry));
  }
  std::vector<std::size_t> selector = Widen(result.selector);
  json out{{"cover", Indices(result.cover)},
           {"size", result.size},
           {"x_star", VectorToJson(result.x_star)},
           {"selector", selector},
           {"checks", std::move(list)},
           {"checks_passed", checks.passed()}};
  if (result.specialized_visited > 0) {
    out["specialized_visited"] = result.specialized_visited;
  }
  return out;
}

json MembershipToJson(const MembershipReport& report) {
  json rows = json::array();
  for (const RowCheck& r : report.rows) {
    json row{{"row", r.row + 1},
             {"achieved", r.achieved.ToString()},
             {"required", r.required.ToString()},
             {"satisfied", r.satisfied()}};
    if (r.witness) row["witness"] = *r.witness + 1;
    if (r.violating) row["violating"] = *r.violating + 1;
    rows.push_back(std::move(row));
  }
  return json{{"feasible", report.feasible}, {"rows", std::move(rows)}};
}

json GridToJson(const GridResult& result) {
  json out{{"status", result.feasible ? "optimal" : "infeasible"},
           {"points", result.points},
           {"feasible_points", result.feasible_points}};
  if (result.feasible) {
    out["objective"] = result.objective.ToString();
    out["objective_display"] = result.objective.ToFixed(kDisplayDigits);
    out["x"] = VectorToJson(result.x);
  }
  return out;
}

json SampleToJson(const SampleReport& report) {
  json examples = json::array();
  for (const Disagreement& d : report.examples) {
    examples.push_back(json{{"x", VectorToJson(d.x)},
                            {"member", d.member},
                            {"in_union", d.in_union}});
  }
  return json{{"samples", report.samples},
              {"members", report.members},
              {"disagreements", report.disagreements},
              {"examples", std::move(examples)}};
}

std::string ReductionText(const Instance& instance,
                          const ReductionState& state) {
  const RowClassification cls = ClassifyRows(instance);
  std::ostringstream out;
  for (const TraceEntry& e : state.trace) {
    out << FormatTraceEntry(e) << " mask=" << MaskLabel(e) << "\n";
  }
  if (state.verdict) {
    out << "INFEASIBLE cause=" << CauseName(state.verdict->cause) << " "
        << state.verdict->detail << "\n";
  }
  out << "domains:\n";
  for (std::size_t k = 0; k < cls.tight_rows.size(); ++k) {
    out << "  row " << cls.tight_rows[k] + 1 << " (tight) types "
        << Braces(Widen(state.domains.tight[k]), false) << "\n";
  }
  for (std::size_t k = 0; k < cls.below.size(); ++k) {
    out << "  row " << cls.below[k] + 1 << " (below) types "
        << Braces(Widen(state.domains.below[k]), false) << " columns "
        << Braces(state.domains.minimal[k], true) << "\n";
  }
  out << "cardinalities:\n";
  for (const Stage& s : state.history) {
    out << "  " << s.name << " tight=" << s.counts.tight
        << " below=" << s.counts.below << " minimal=" << s.counts.minimal
        << " total=" << s.counts.total() << "\n";
  }
  return out.str();
}

}  // namespace fre
