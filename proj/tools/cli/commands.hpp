// Copyright 2026 The ppc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPC_TOOLS_CLI_COMMANDS_HPP_
#define PPC_TOOLS_CLI_COMMANDS_HPP_

#include <ostream>

#include "config.hpp"

namespace ppc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitRecovery = 3,
  kExitAudit = 4,
};

// CSV rows for f = 1..F, both schemes, plus the two limit rows.
int cmd_rate_table(const ExperimentConfig& cfg, std::ostream& out);

// Full pipeline per desired index: rate matrix, trace with answers,
// recovered table, CSV report.
int cmd_simulate(const ExperimentConfig& cfg, std::ostream& out);

// Pass/fail matrix of every structural, download, recovery and privacy check.
int cmd_verify(const ExperimentConfig& cfg, std::ostream& out);

// Parses argv, runs one subcommand and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppc::cli

#endif  // PPC_TOOLS_CLI_COMMANDS_HPP_
