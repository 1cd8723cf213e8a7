// Copyright 2026 The tracecodes Authors.
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

#ifndef TRACECODES_TOOLS_COMMANDS_HPP_
#define TRACECODES_TOOLS_COMMANDS_HPP_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "tracecodes/config.hpp"

namespace tracecodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitPrecondition = 2;

struct Outcome {
  nlohmann::json report;
  std::optional<std::string> csv;  // tabular payload, when the command has one
  bool pass = true;
};

// Runs config.command ("bound kl", "family ask", "norm random", ...).
// Throws PreconditionError or FormatError on bad input.
Outcome execute(const ExperimentConfig& config);

// Executes, wraps the report with version/config/seed/wall-clock metadata,
// writes the outputs and returns the process exit status.
int run(ExperimentConfig config);

}  // namespace tracecodes::cli

#endif  // TRACECODES_TOOLS_COMMANDS_HPP_
