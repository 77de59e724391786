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

// Serialization of reports, outcomes, sweeps and assignment files.

#ifndef GATEASSIGN_REPORT_IO_H_
#define GATEASSIGN_REPORT_IO_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gateassign/objective.h"
#include "gateassign/schedule.h"
#include "gateassign/solver.h"

namespace gateassign {

nlohmann::ordered_json CostReportToJson(const Schedule& s,
                                        const CostReport& report);

// `include_timing` false writes 0 for elapsed_s so that output depends only
// on the inputs.
nlohmann::ordered_json SolveOutcomeToJson(const Schedule& s,
                                          const SolveOutcome& outcome,
                                          const SolveConfig& cfg,
                                          bool include_timing = true);

// Human-readable per-gate listing.
std::string SolveOutcomeToTable(const Schedule& s, const SolveOutcome& outcome,
                                const SolveConfig& cfg);
std::string CostReportToTable(const Schedule& s, const CostReport& report);

// `gates,status,objective,runtime_s`; infeasible rows leave objective empty.
std::string SweepToCsv(const std::vector<SweepRow>& rows,
                       bool include_timing = true);
std::string SweepToTable(const std::vector<SweepRow>& rows,
                         bool include_timing = true);

// `flight_id,gate` CSV with optional header. Every flight of `s` must appear
// exactly once; `gate_count` defaults to one more than the largest gate.
// Throws ParseError on malformed rows and ContractError on coverage errors.
Assignment ParseAssignment(std::istream& in, const Schedule& s,
                           std::optional<int> gate_count = std::nullopt);
std::string SerializeAssignment(const Schedule& s, const Assignment& a);

}  // namespace gateassign

#endif  // GATEASSIGN_REPORT_IO_H_
