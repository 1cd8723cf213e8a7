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

// The acceptance suite, criteria 1 through 10.
//
// "full" runs every criterion at its stated size. "quick" shrinks the
// Monte-Carlo trial counts and the larger fields so that the whole profile
// stays within two minutes on one core.

#ifndef TRACECODES_VERIFY_HPP_
#define TRACECODES_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tracecodes {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct VerifyOptions {
  std::string profile = "quick";  // quick | full
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  // Criteria to run; empty means all.
  std::vector<int> only;
  // Harness self-test: shrink the named criterion's bound so it must fail.
  std::optional<int> inject_violation;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  double wall_seconds = 0;
  nlohmann::json detail = nlohmann::json::object();
};

struct VerifyReport {
  std::string profile;
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool pass = false;
};

// Throws PreconditionError for an unknown profile or criterion id.
VerifyReport verify_all(const VerifyOptions& options);
CriterionResult verify_criterion(int id, const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& r);
// Drops every key that carries wall-clock time, recursively.
nlohmann::json strip_wall_clock(nlohmann::json j);

}  // namespace tracecodes

#endif  // TRACECODES_VERIFY_HPP_
