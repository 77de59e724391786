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

#include "gateassign/report_io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace gateassign {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string FormatDouble(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

nlohmann::ordered_json CostReportToJson(const Schedule& s,
                                        const CostReport& report) {
  nlohmann::ordered_json j;
  j["mode"] = ObjectiveModeName(report.mode);
  j["buffer"] = report.buffer;
  j["feasible"] = report.feasible;
  j["conflicts"] = report.conflict_count;
  j["total"] = report.total;
  auto terms = nlohmann::ordered_json::array();
  for (const CostTerm& t : report.terms) {
    terms.push_back({{"earlier", t.earlier},
                     {"later", t.later},
                     {"gate", t.gate},
                     {"gap", t.gap},
                     {"value", t.value}});
  }
  j["terms"] = std::move(terms);
  auto violations = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"earlier", s[v.earlier].id},
                          {"later", s[v.later].id},
                          {"gate", v.gate}});
  }
  j["violations"] = std::move(violations);
  return j;
}

nlohmann::ordered_json SolveOutcomeToJson(const Schedule& s,
                                          const SolveOutcome& outcome,
                                          const SolveConfig& cfg,
                                          bool include_timing) {
  nlohmann::ordered_json j;
  j["status"] = SolveStatusName(outcome.status);
  j["gates"] = cfg.gate_count;
  j["buffer"] = cfg.buffer;
  j["mode"] = ObjectiveModeName(cfg.mode);
  if (outcome.report) {
    j["objective"] = outcome.report->total;
  } else {
    j["objective"] = nullptr;
  }
  auto assignment = nlohmann::ordered_json::array();
  if (outcome.assignment) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      assignment.push_back(
          {{"flight", s[i].id}, {"gate", outcome.assignment->gate_of[i]}});
    }
  }
  j["assignment"] = std::move(assignment);
  j["nodes"] = outcome.nodes_explored;
  j["elapsed_s"] = include_timing ? outcome.elapsed_s : 0.0;
  return j;
}

std::string CostReportToTable(const Schedule& s, const CostReport& report) {
  std::ostringstream out;
  out << "mode      " << ObjectiveModeName(report.mode) << '\n'
      << "buffer    " << report.buffer << '\n'
      << "feasible  " << (report.feasible ? "yes" : "no") << '\n'
      << "conflicts " << report.conflict_count << '\n'
      << "total     " << FormatDouble(report.total, "%.9g") << '\n';
  if (!report.terms.empty()) {
    out << "\nearlier     later       gate    gap  value\n";
    for (const CostTerm& t : report.terms) {
      char line[160];
      std::snprintf(line, sizeof(line), "%-11s %-11s %4d %6d  %.9g\n",
                    t.earlier.c_str(), t.later.c_str(), t.gate, t.gap, t.value);
      out << line;
    }
  }
  for (const Violation& v : report.violations) {
    out << "conflict: " << s[v.earlier].id << " and " << s[v.later].id
        << " on gate " << v.gate << '\n';
  }
  return out.str();
}

std::string SolveOutcomeToTable(const Schedule& s, const SolveOutcome& outcome,
                                const SolveConfig& cfg) {
  std::ostringstream out;
  out << "status    " << SolveStatusName(outcome.status) << '\n'
      << "gates     " << cfg.gate_count << '\n'
      << "buffer    " << cfg.buffer << '\n'
      << "objective "
      << (outcome.report ? FormatDouble(outcome.report->total, "%.9g")
                         : std::string("-"))
      << '\n'
      << "nodes     " << outcome.nodes_explored << '\n';
  if (outcome.assignment) {
    const auto chains = GateChains(s, *outcome.assignment);
    for (int g = 0; g < cfg.gate_count; ++g) {
      out << "gate " << g << ':';
      for (int i : chains[g]) {
        out << ' ' << s[i].id << '[' << FormatTime(s[i].arrival) << '-'
            << FormatTime(s[i].departure) << ']';
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string SweepToCsv(const std::vector<SweepRow>& rows, bool include_timing) {
  std::string out = "gates,status,objective,runtime_s\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.gates);
    out += ',';
    out += SolveStatusName(r.status);
    out += ',';
    if (r.objective) out += FormatDouble(*r.objective, "%.9g");
    out += ',';
    out += FormatDouble(include_timing ? r.runtime_s : 0.0, "%.3f");
    out += '\n';
  }
  return out;
}

std::string SweepToTable(const std::vector<SweepRow>& rows,
                         bool include_timing) {
  std::string out = "gates  status      objective        runtime_s\n";
  for (const SweepRow& r : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%5d  %-10s  %-15s  %9.3f\n", r.gates,
                  std::string(SolveStatusName(r.status)).c_str(),
                  r.objective ? FormatDouble(*r.objective, "%.9g").c_str() : "-",
                  include_timing ? r.runtime_s : 0.0);
    out += line;
  }
  return out;
}

Assignment ParseAssignment(std::istream& in, const Schedule& s,
                           std::optional<int> gate_count) {
  std::vector<int> gate_of(s.size(), -1);
  std::string raw;
  int line_no = 0;
  bool header_allowed = true;
  int max_gate = -1;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected 2 fields", line_no);
    }
    const std::string_view id = Trim(line.substr(0, comma));
    const std::string_view gate_text = Trim(line.substr(comma + 1));
    if (header_allowed && id == "flight_id" && gate_text == "gate") {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    int gate = -1;
    const auto [ptr, ec] = std::from_chars(
        gate_text.data(), gate_text.data() + gate_text.size(), gate);
    if (ec != std::errc() || ptr != gate_text.data() + gate_text.size() ||
        gate < 0) {
      throw ParseError("malformed gate '" + std::string(gate_text) + "'",
                       line_no);
    }
    const int index = s.IndexOf(id);
    if (index < 0) {
      throw ParseError("unknown flight " + std::string(id), line_no);
    }
    if (gate_of[index] >= 0) {
      throw ParseError("flight " + std::string(id) + " assigned twice",
                       line_no);
    }
    gate_of[index] = gate;
    max_gate = std::max(max_gate, gate);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (gate_of[i] < 0) {
      throw ContractError("assignment is missing flight " + s[i].id);
    }
  }
  Assignment a{std::move(gate_of), gate_count.value_or(max_gate + 1)};
  if (a.gate_count <= 0) a.gate_count = 1;
  CheckCovers(s, a);
  return a;
}

std::string SerializeAssignment(const Schedule& s, const Assignment& a) {
  std::string out = "flight_id,gate\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i].id;
    out += ',';
    out += std::to_string(a.gate_of[i]);
    out += '\n';
  }
  return out;
}

}  // namespace gateassign
