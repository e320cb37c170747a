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

// JSON and text renderings shared by the command-line tool and tests.
//
// Numbers are exact decimal strings; fields ending in "_display" repeat them
// rounded to two places. Indices are 1-based. Nothing time-dependent is
// included, so equal inputs give byte-identical documents.

#ifndef FRE_REPORT_HPP_
#define FRE_REPORT_HPP_

#include <string>

#include "fre/extremals.hpp"
#include "fre/model.hpp"
#include "fre/oracle.hpp"
#include "fre/reduction.hpp"
#include "fre/solver.hpp"
#include "fre/vertex_cover.hpp"
#include "json.hpp"

namespace fre {

inline constexpr int kDisplayDigits = 2;

nlohmann::json DisplayVector(const Vector& v);
nlohmann::json TripleToJson(const RowClassification& cls, const Triple& t);
nlohmann::json CellToJson(const Cell& cell);
nlohmann::json VerdictToJson(const Verdict& verdict);
nlohmann::json TraceToJson(const ReductionState& state);
nlohmann::json DomainsToJson(const RowClassification& cls, const Domains& d);

nlohmann::json SolutionToJson(const Instance& instance,
                              const Solution& solution, bool with_trace);
nlohmann::json RegionToJson(const Instance& instance, const Region& region);
nlohmann::json ExtremalsToJson(const Instance& instance);
nlohmann::json CoverToJson(const CoverResult& result,
                           const StructureReport& checks);
nlohmann::json MembershipToJson(const MembershipReport& report);
nlohmann::json GridToJson(const GridResult& result);
nlohmann::json SampleToJson(const SampleReport& report);

// Trace lines followed by the final domains and the cardinality history.
std::string ReductionText(const Instance& instance,
                          const ReductionState& state);

}  // namespace fre

#endif  // FRE_REPORT_HPP_
