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

#ifndef TRACECODES_CONFIG_HPP_
#define TRACECODES_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tracecodes {

// Everything a CLI run depends on. Reports embed it verbatim.
struct ExperimentConfig {
  std::string command;

  // Field
  std::optional<std::uint32_t> p;
  std::uint32_t n = 1;
  std::optional<std::vector<std::uint32_t>> modulus;

  // Families
  int c = 3;
  std::uint64_t chi = 0;
  int r = 1;

  // Bounds
  std::optional<std::uint64_t> bound_n;
  std::optional<std::uint64_t> bound_q;
  std::optional<double> gamma;  // command default when unset
  double constant = 1500;
  bool raw = false;
  std::uint64_t genus_g = 0;

  // Monte-Carlo
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  double alpha = 1;
  std::optional<double> s;  // command default when unset
  std::string distribution = "rademacher";

  std::string profile = "quick";
  unsigned jobs = 1;

  // Input file paths and other command-specific values.
  nlohmann::json inputs = nlohmann::json::object();

  std::string output;      // JSON report; empty: stdout
  std::string csv_output;  // tabular payload as CSV; empty: none

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

nlohmann::json to_json(const ExperimentConfig& c);
// Missing keys keep their defaults; wrong types raise FormatError.
ExperimentConfig config_from_json(const nlohmann::json& j);

// Replaces the seed with TRACECODES_SEED when that variable is set. Returns
// true when it was applied; a malformed value raises FormatError.
bool apply_seed_override(ExperimentConfig& c);

}  // namespace tracecodes

#endif  // TRACECODES_CONFIG_HPP_
