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

// Command-line front end.
//
// Exit status: 0 success (optimal, feasible, checks passed), 1 infeasible
// or a failed check, 2 bad input. Results go to stdout; wall time goes to
// stderr so stdout stays byte-identical between runs.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fre/generate.hpp"
#include "fre/model.hpp"
#include "fre/oracle.hpp"
#include "fre/reduction.hpp"
#include "fre/report.hpp"
#include "fre/solver.hpp"
#include "fre/vertex_cover.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;

std::string Bracket(const fre::Vector& v) {
  std::string out = "[";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out += ", ";
    out += v[j].ToString();
  }
  return out + "]";
}

class Stopwatch {
 public:
  ~Stopwatch() {
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    std::cerr << "time: " << ms << " ms\n";
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct SolveArgs {
  std::string path;
  bool no_rules = false;
  bool trace = false;
  bool region = false;
  bool json = false;
  unsigned threads = 0;
};

int RunSolve(const SolveArgs& args) {
  const fre::Instance instance = fre::LoadInstance(args.path);
  Stopwatch watch;
  fre::SolveOptions options;
  options.apply_rules = !args.no_rules;
  options.threads = args.threads;
  const fre::Solution solution = fre::Solve(instance, options);
  std::optional<fre::Region> region;
  if (args.region) region = fre::FeasibleRegion(instance, true, options);

  if (args.json) {
    json doc = fre::SolutionToJson(instance, solution, args.trace);
    if (region) doc["region"] = fre::RegionToJson(instance, *region)["cells"];
    std::cout << doc.dump(2) << "\n";
  } else {
    if (args.trace) {
      std::cout << fre::ReductionText(instance, solution.reduction);
    }
    const bool optimal = solution.status == fre::Status::kOptimal;
    std::cout << "status: " << (optimal ? "optimal" : "infeasible") << "\n";
    if (optimal) {
      const auto& best = *solution.best;
      std::cout << "objective: " << best.objective.ToString() << " (display "
                << best.objective.ToFixed(fre::kDisplayDigits) << ")\n"
                << "x: " << Bracket(best.x) << "\n";
    }
    if (solution.verdict) {
      std::cout << "cause: " << fre::CauseName(solution.verdict->cause)
                << " (" << solution.verdict->detail << ")\n";
    }
    const auto& s = solution.stats;
    std::cout << "triples: full=" << s.full_space
              << " searched=" << s.search_space << " enumerated="
              << s.enumerated << " admissible=" << s.admissible << "\n";
    if (region) {
      for (const auto& rc : region->cells) {
        std::cout << "cell: " << Bracket(rc.cell.lower) << " .. "
                  << Bracket(rc.cell.upper) << "\n";
      }
    }
  }
  return solution.status == fre::Status::kOptimal ? kExitOk : kExitInfeasible;
}

int RunReduce(const std::string& path) {
  const fre::Instance instance = fre::LoadInstance(path);
  const fre::Analysis analysis = fre::Analyze(instance);
  if (auto verdict = fre::GateFeasibility(analysis)) {
    std::cout << "INFEASIBLE cause=" << fre::CauseName(verdict->cause) << " "
              << verdict->detail << "\n";
    return kExitInfeasible;
  }
  const fre::ReductionState state =
      fre::Reduce(instance, analysis.ext, analysis.cls, analysis.bounds);
  std::cout << fre::ReductionText(instance, state);
  return state.verdict ? kExitInfeasible : kExitOk;
}

int RunRegion(const std::string& path, bool keep_dominated, bool no_rules,
              bool as_json) {
  const fre::Instance instance = fre::LoadInstance(path);
  Stopwatch watch;
  fre::SolveOptions options;
  options.apply_rules = !no_rules;
  const fre::Region region =
      fre::FeasibleRegion(instance, !keep_dominated, options);
  if (as_json) {
    std::cout << fre::RegionToJson(instance, region).dump(2) << "\n";
  } else {
    if (region.verdict) {
      std::cout << "infeasible: " << fre::CauseName(region.verdict->cause)
                << " (" << region.verdict->detail << ")\n";
    }
    for (const auto& rc : region.cells) {
      std::cout << "lower: " << Bracket(rc.cell.lower) << "\n"
                << "upper: " << Bracket(rc.cell.upper) << "\n";
    }
  }
  return region.cells.empty() ? kExitInfeasible : kExitOk;
}

int RunCover(const std::string& path, bool brute, bool specialized,
             bool as_json, unsigned threads) {
  const fre::Graph g = fre::LoadGraph(path);
  Stopwatch watch;
  fre::CoverOptions options;
  options.specialized = specialized;
  options.threads = threads;
  const fre::CoverResult result = fre::SolveCover(g, options);
  const fre::StructureReport checks = fre::VerifyStructure(result, g);
  std::optional<fre::BruteCover> reference;
  if (brute) reference = fre::BruteForceCover(g);
  bool ok = checks.passed() && fre::IsCover(g, result.cover);
  if (reference) ok = ok && reference->size == result.size;

  if (as_json) {
    json doc = fre::CoverToJson(result, checks);
    if (reference) {
      std::vector<std::size_t> one_based;
      for (std::size_t v : reference->cover) one_based.push_back(v + 1);
      doc["brute"] = json{{"size", reference->size}, {"cover", one_based}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "size: " << result.size << "\ncover: {";
    for (std::size_t k = 0; k < result.cover.size(); ++k) {
      std::cout << (k ? "," : "") << result.cover[k] + 1;
    }
    std::cout << "}\n";
    for (const auto& c : checks.checks) {
      std::cout << "check " << c.name << ": " << (c.passed ? "ok" : "FAILED");
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    if (reference) {
      std::cout << "brute-force size: " << reference->size
                << (reference->size == result.size ? " (agrees)" : " (DIFFERS)")
                << "\n";
    }
  }
  return ok ? kExitOk : kExitInfeasible;
}

struct OracleArgs {
  std::string path;
  bool grid = false;
  uint64_t sample = 0;
  uint64_t seed = 0;
  uint64_t budget = fre::kDefaultGridBudget;
  bool graph = false;
};

int RunOracle(const OracleArgs& args) {
  json doc;
  int code = kExitOk;
  if (args.graph) {
    const fre::Graph g = fre::LoadGraph(args.path);
    const fre::BruteCover cover = fre::BruteForceCover(g);
    std::vector<std::size_t> one_based;
    for (std::size_t v : cover.cover) one_based.push_back(v + 1);
    doc = json{{"size", cover.size}, {"cover", one_based}};
  } else {
    const fre::Instance instance = fre::LoadInstance(args.path);
    if (args.grid || args.sample == 0) {
      const fre::GridResult grid = fre::GridOptimum(instance, args.budget);
      doc["grid"] = fre::GridToJson(grid);
      if (!grid.feasible) code = kExitInfeasible;
    }
    if (args.sample > 0) {
      const fre::Region region = fre::FeasibleRegion(instance, false);
      std::vector<fre::Cell> cells;
      for (const auto& rc : region.cells) cells.push_back(rc.cell);
      const fre::SampleReport report =
          fre::SampleFeasibility(instance, cells, args.sample, args.seed);
      doc["sample"] = fre::SampleToJson(report);
      doc["sample"]["seed"] = args.seed;
      if (report.disagreements > 0) code = kExitInfeasible;
    }
  }
  std::cout << doc.dump(2) << "\n";
  return code;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 5;
  double density = 0.5;
  uint64_t seed = 0;
  bool planted = false;
  std::string sense = "min";
  int decimals = 2;
};

int RunGen(const GenArgs& args) {
  const fre::Sense sense =
      args.sense == "max" ? fre::Sense::kMaximize : fre::Sense::kMinimize;
  try {
    if (args.kind == "random-graph") {
      std::cout << fre::GraphToDimacs(
          fre::RandomGraph(args.n, args.density, args.seed));
    } else if (args.kind == "random-binary-fre") {
      std::cout << fre::InstanceToJson(fre::RandomBinaryFre(
                                           args.n, args.density, sense, args.seed))
                       .dump(2)
                << "\n";
    } else {
      fre::FreParams params;
      params.n = args.n;
      params.density = args.density;
      params.seed = args.seed;
      params.planted = args.planted;
      params.sense = sense;
      params.decimals = args.decimals;
      std::cout << fre::InstanceToJson(fre::RandomFre(params)).dump(2) << "\n";
    }
  } catch (const std::invalid_argument& e) {
    throw fre::InputError(e.what());
  }
  return kExitOk;
}

int RunCheck(const std::string& path, const std::string& x_text, bool as_json) {
  const fre::Instance instance = fre::LoadInstance(path);
  json x_doc;
  try {
    const bool bracketed = !x_text.empty() && x_text.front() == '[';
    x_doc = json::parse(bracketed ? x_text : "[" + x_text + "]");
  } catch (const json::parse_error&) {
    throw fre::InputError("cannot parse x: " + x_text);
  }
  fre::Vector x;
  for (const auto& v : x_doc) x.push_back(fre::DecimalFromJson(v));
  const fre::MembershipReport report = fre::CheckMembership(instance, x);
  if (as_json) {
    std::cout << fre::MembershipToJson(report).dump(2) << "\n";
  } else {
    for (const auto& r : report.rows) {
      std::cout << "row " << r.row + 1 << ": " << r.achieved.ToString()
                << (r.satisfied() ? " = " : " vs ") << r.required.ToString();
      if (r.witness) std::cout << " witness=" << *r.witness + 1;
      if (r.violating) std::cout << " violating=" << *r.violating + 1;
      std::cout << "\n";
    }
    std::cout << (report.feasible ? "feasible" : "infeasible") << "\n";
  }
  return report.feasible ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for linear objectives over max-min equation systems"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize an instance");
  solve_cmd->add_option("file", solve.path, "Instance document")->required();
  solve_cmd->add_flag("--no-rules", solve.no_rules, "Skip domain pruning");
  solve_cmd->add_flag("--trace", solve.trace, "Print the pruning trace");
  solve_cmd->add_flag("--region", solve.region, "Also list the feasible cells");
  solve_cmd->add_flag("--json", solve.json, "Emit a JSON document");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads (0: FRE_THREADS)");

  std::string reduce_path;
  auto* reduce_cmd = app.add_subcommand("reduce", "Show the pruning trace");
  reduce_cmd->add_option("file", reduce_path, "Instance document")->required();

  std::string region_path;
  bool keep_dominated = false;
  bool region_no_rules = false;
  bool region_json = false;
  auto* region_cmd = app.add_subcommand("region", "List the feasible cells");
  region_cmd->add_option("file", region_path, "Instance document")->required();
  region_cmd->add_flag("--keep-dominated", keep_dominated,
                       "Keep cells contained in other cells");
  region_cmd->add_flag("--no-rules", region_no_rules, "Skip domain pruning");
  region_cmd->add_flag("--json", region_json, "Emit a JSON document");

  std::string vc_path;
  bool vc_brute = false;
  bool vc_specialized = false;
  bool vc_json = false;
  unsigned vc_threads = 0;
  auto* vc_cmd = app.add_subcommand("vc", "Minimum vertex cover of a graph");
  vc_cmd->add_option("file", vc_path, "Graph (DIMACS-like or adjacency JSON)")
      ->required();
  vc_cmd->add_flag("--brute", vc_brute, "Cross-check by subset enumeration");
  vc_cmd->add_flag("--specialized", vc_specialized,
                   "Cross-check with the direct selector enumeration");
  vc_cmd->add_flag("--json", vc_json, "Emit a JSON document");
  vc_cmd->add_option("--threads", vc_threads, "Worker threads (0: FRE_THREADS)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force references");
  oracle_cmd->add_option("file", oracle.path, "Instance document or graph")
      ->required();
  oracle_cmd->add_flag("--grid", oracle.grid, "Grid-search optimum");
  oracle_cmd->add_option("--sample", oracle.sample,
                         "Compare membership with the cell union on k points");
  oracle_cmd->add_option("--seed", oracle.seed, "Sampling seed");
  oracle_cmd->add_option("--budget", oracle.budget, "Grid point budget");
  oracle_cmd->add_flag("--graph", oracle.graph,
                       "Input is a graph; report a minimum cover");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance or graph");
  gen_cmd->add_option("kind", gen.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"random-fre", "random-binary-fre", "random-graph"}));
  gen_cmd->add_option("--n", gen.n, "Order")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--density", gen.density, "Nonzero probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_flag("--planted", gen.planted, "Right-hand side from a random x");
  gen_cmd->add_option("--sense", gen.sense, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  gen_cmd->add_option("--decimals", gen.decimals, "Fractional digits")
      ->check(CLI::Range(0, 6));

  std::string check_path;
  std::string check_x;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "Test membership of a point");
  check_cmd->add_option("file", check_path, "Instance document")->required();
  check_cmd->add_option("--x", check_x, "Point, e.g. 0.5,0.25 or a JSON array")
      ->required();
  check_cmd->add_flag("--json", check_json, "Emit a JSON document");

  std::string extremals_path;
  auto* extremals_cmd =
      app.add_subcommand("extremals", "Dump row classes and extremal vectors");
  extremals_cmd->add_option("file", extremals_path, "Instance document")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*reduce_cmd) return RunReduce(reduce_path);
    if (*region_cmd) {
      return RunRegion(region_path, keep_dominated, region_no_rules, region_json);
    }
    if (*vc_cmd) {
      return RunCover(vc_path, vc_brute, vc_specialized, vc_json, vc_threads);
    }
    if (*oracle_cmd) return RunOracle(oracle);
    if (*gen_cmd) return RunGen(gen);
    if (*check_cmd) return RunCheck(check_path, check_x, check_json);
    if (*extremals_cmd) {
      std::cout << fre::ExtremalsToJson(fre::LoadInstance(extremals_path)).dump(2)
                << "\n";
      return kExitOk;
    }
  } catch (const fre::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
