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

#ifndef GATEASSIGN_CLI_H_
#define GATEASSIGN_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace gateassign {

// Exit codes: 0 success, 1 usage or data error, 2 infeasible / conflicts.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

// Runs one invocation of the command-line tool. `args` excludes the program
// name. `-` as an input path reads from `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace gateassign

#endif  // GATEASSIGN_CLI_H_
