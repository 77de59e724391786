// Copyright 2026 The gateassign Authors
//
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

#include "gateassign/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include "CLI11.hpp"

#include "gateassign/objective.h"
#include "gateassign/report_io.h"
#include "gateassign/schedule.h"
#include "gateassign/solver.h"

namespace gateassign {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Opens `path`, or hands back `stdin_stream` for "-".
class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw InputError("cannot read " + path);
    stream_ = file_.get();
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

struct Options {
  std::string input = "-";
  std::string assignment;
  int gates = 0;
  int gates_from = 1;
  int gates_to = 1;
  Minutes buffer = kDefaultBuffer;
  std::string objective = "adjacent";
  std::string engine = "exact";
  std::optional<double> time_limit;
  std::uint64_t seed = 0;
  std::string format;
  bool no_timing = false;
  int count = 996;
  Minutes start = 360;
  Minutes end = 1439;
  Minutes stay = 60;
};

const std::map<std::string, ObjectiveMode> kObjectives{
    {"adjacent", ObjectiveMode::kAdjacentExpected},
    {"legacy", ObjectiveMode::kAllPairsLegacy}};
const std::map<std::string, Engine> kEngines{{"exact", Engine::kExact},
                                             {"greedy", Engine::kGreedy},
                                             {"greedy+local", Engine::kGreedyLocal},
                                             {"brute", Engine::kBruteForce}};

SolveConfig MakeConfig(const Options& o) {
  SolveConfig cfg;
  cfg.gate_count = o.gates;
  cfg.buffer = o.buffer;
  cfg.mode = kObjectives.at(o.objective);
  cfg.time_limit_s = o.time_limit;
  cfg.seed = o.seed;
  return cfg;
}

Schedule ReadSchedule(const Options& o, std::istream& in) {
  Input input(o.input, in);
  return ParseSchedule(input.get());
}

int RunSolve(const Options& o, std::istream& in, std::ostream& out) {
  const Schedule s = ReadSchedule(o, in);
  const SolveConfig cfg = MakeConfig(o);
  const SolveOutcome outcome = Solve(s, cfg, kEngines.at(o.engine));
  if (o.format == "table") {
    out << SolveOutcomeToTable(s, outcome, cfg);
  } else {
    out << SolveOutcomeToJson(s, outcome, cfg, !o.no_timing).dump(2) << '\n';
  }
  return outcome.has_solution() ? kExitOk : kExitInfeasible;
}

int RunEval(const Options& o, std::istream& in, std::ostream& out) {
  if (o.input == "-" && o.assignment == "-") {
    throw InputError("schedule and assignment cannot both come from stdin");
  }
  const Schedule s = ReadSchedule(o, in);
  Input assignment_input(o.assignment, in);
  std::optional<int> gates;
  if (o.gates > 0) gates = o.gates;
  const Assignment a = ParseAssignment(assignment_input.get(), s, gates);
  const CostReport report =
      EvaluateAssignment(s, a, o.buffer, kObjectives.at(o.objective));
  if (o.format == "table") {
    out << CostReportToTable(s, report);
  } else {
    out << CostReportToJson(s, report).dump(2) << '\n';
  }
  return report.feasible ? kExitOk : kExitInfeasible;
}

int RunSweep(const Options& o, std::istream& in, std::ostream& out) {
  if (o.gates_from > o.gates_to) {
    throw ConfigError("--gates-from must not exceed --gates-to");
  }
  const Schedule s = ReadSchedule(o, in);
  SolveConfig cfg = MakeConfig(o);
  cfg.gate_count = o.gates_from;
  const auto rows =
      SweepGates(s, o.gates_from, o.gates_to, cfg, kEngines.at(o.engine));
  if (o.format == "table") {
    out << SweepToTable(rows, !o.no_timing);
  } else if (o.format == "json") {
    auto j = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
      nlohmann::ordered_json row;
      row["gates"] = r.gates;
      row["status"] = SolveStatusName(r.status);
      if (r.objective) {
        row["objective"] = *r.objective;
      } else {
        row["objective"] = nullptr;
      }
      row["runtime_s"] = o.no_timing ? 0.0 : r.runtime_s;
      j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
  } else {
    out << SweepToCsv(rows, !o.no_timing);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Flight-to-gate assignment toolkit"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "Schedule CSV path, - for stdin")
        ->capture_default_str();
  };
  const auto add_buffer = [&o](CLI::App* sub) {
    sub->add_option("--buffer", o.buffer, "Buffer minutes locked around stays")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  const auto add_objective = [&o](CLI::App* sub) {
    sub->add_option("--objective", o.objective, "adjacent | legacy")
        ->check(CLI::IsMember({"adjacent", "legacy"}))
        ->capture_default_str();
  };
  const auto add_engine = [&o](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "exact | greedy | greedy+local | brute")
        ->check(CLI::IsMember({"exact", "greedy", "greedy+local", "brute"}))
        ->capture_default_str();
  };
  const auto add_search = [&o](CLI::App* sub) {
    sub->add_option("--time-limit", o.time_limit, "Seconds per solve")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "Heuristic seed")->capture_default_str();
    sub->add_flag("--no-timing", o.no_timing,
                  "Report 0 for elapsed times (reproducible output)");
  };

  CLI::App* solve = app.add_subcommand("solve", "Optimize an assignment");
  add_input(solve);
  solve->add_option("--gates", o.gates, "Number of gates")
      ->required()
      ->check(CLI::PositiveNumber);
  add_buffer(solve);
  add_objective(solve);
  add_engine(solve);
  add_search(solve);
  solve->add_option("--format", o.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a given assignment");
  add_input(eval);
  eval->add_option("--assignment", o.assignment, "flight_id,gate CSV")
      ->required();
  eval->add_option("--gates", o.gates, "Number of gates (default: max + 1)")
      ->check(CLI::PositiveNumber);
  add_buffer(eval);
  add_objective(eval);
  eval->add_option("--format", o.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* sweep = app.add_subcommand("sweep", "Solve across gate counts");
  add_input(sweep);
  sweep->add_option("--gates-from", o.gates_from)
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--gates-to", o.gates_to)
      ->required()
      ->check(CLI::PositiveNumber);
  add_buffer(sweep);
  add_objective(sweep);
  add_engine(sweep);
  add_search(sweep);
  sweep->add_option("--format", o.format, "csv | table | json")
      ->check(CLI::IsMember({"csv", "table", "json"}));

  CLI::App* mingates =
      app.add_subcommand("mingates", "Smallest conflict-free gate count");
  add_input(mingates);
  add_buffer(mingates);

  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic schedule");
  gen->add_option("--count", o.count)->capture_default_str();
  gen->add_option("--start", o.start, "Earliest arrival (minutes)")
      ->capture_default_str();
  gen->add_option("--end", o.end, "Latest arrival (minutes)")
      ->capture_default_str();
  gen->add_option("--stay", o.stay, "Minutes on the gate")->capture_default_str();
  gen->add_option("--seed", o.seed)->capture_default_str();

  CLI::App* scatter =
      app.add_subcommand("scatter", "index,arrival CSV for scatter plots");
  add_input(scatter);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (solve->parsed()) return RunSolve(o, in, out);
    if (eval->parsed()) return RunEval(o, in, out);
    if (sweep->parsed()) return RunSweep(o, in, out);
    if (mingates->parsed()) {
      out << MinGatesRequired(ReadSchedule(o, in), o.buffer) << '\n';
      return kExitOk;
    }
    if (gen->parsed()) {
      out << SerializeSchedule(
          GenerateSchedule(o.count, o.start, o.end, o.stay, o.seed));
      return kExitOk;
    }
    if (scatter->parsed()) {
      out << ScatterExport(ReadSchedule(o, in));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace gateassign
