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

#include "tracecodes/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <type_traits>

#include "tracecodes/errors.hpp"

namespace tracecodes {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
T value_of(const json& v, const char* key) {
  if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
    if (!v.is_number_unsigned()) {
      throw FormatError(std::string("config: ") + key + " must be a nonnegative integer");
    }
  }
  return v.get<T>();
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = value_of<T>(j[key], key);
}

template <typename T>
void read(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key)) return;
  if (j[key].is_null()) {
    out.reset();
  } else {
    out = value_of<T>(j[key], key);
  }
}

}  // namespace

json to_json(const ExperimentConfig& c) {
  return {{"command", c.command},
          {"p", optional_json(c.p)},
          {"n", c.n},
          {"modulus", optional_json(c.modulus)},
          {"c", c.c},
          {"chi", c.chi},
          {"r", c.r},
          {"bound_n", optional_json(c.bound_n)},
          {"bound_q", optional_json(c.bound_q)},
          {"gamma", optional_json(c.gamma)},
          {"constant", c.constant},
          {"raw", c.raw},
          {"g", c.genus_g},
          {"seed", c.seed},
          {"trials", c.trials},
          {"alpha", c.alpha},
          {"s", optional_json(c.s)},
          {"distribution", c.distribution},
          {"profile", c.profile},
          {"jobs", c.jobs},
          {"inputs", c.inputs},
          {"output", c.output},
          {"csv_output", c.csv_output}};
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("config: expected a JSON object");
  ExperimentConfig c;
  try {
    read(j, "command", c.command);
    read(j, "p", c.p);
    read(j, "n", c.n);
    read(j, "modulus", c.modulus);
    read(j, "c", c.c);
    read(j, "chi", c.chi);
    read(j, "r", c.r);
    read(j, "bound_n", c.bound_n);
    read(j, "bound_q", c.bound_q);
    read(j, "gamma", c.gamma);
    read(j, "constant", c.constant);
    read(j, "raw", c.raw);
    read(j, "g", c.genus_g);
    read(j, "seed", c.seed);
    read(j, "trials", c.trials);
    read(j, "alpha", c.alpha);
    read(j, "s", c.s);
    read(j, "distribution", c.distribution);
    read(j, "profile", c.profile);
    read(j, "jobs", c.jobs);
    read(j, "inputs", c.inputs);
    if (!c.inputs.is_object()) throw FormatError("config: inputs must be an object");
    read(j, "output", c.output);
    read(j, "csv_output", c.csv_output);
  } catch (const json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return c;
}

bool apply_seed_override(ExperimentConfig& c) {
  const char* env = std::getenv("TRACECODES_SEED");
  if (env == nullptr || *env == '\0') return false;
  std::uint64_t seed = 0;
  const char* end = env + std::strlen(env);
  const auto res = std::from_chars(env, end, seed);
  if (res.ec != std::errc() || res.ptr != end) {
    throw FormatError(std::string("TRACECODES_SEED is not an unsigned integer: ") + env);
  }
  c.seed = seed;
  return true;
}

}  // namespace tracecodes
