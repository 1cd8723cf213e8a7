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

// Runs the acceptance suite and prints one line per criterion.
//
// Usage: tracecodes_acceptance [quick|full] [jobs]

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "tracecodes/verify.hpp"

int main(int argc, char** argv) {
  tracecodes::VerifyOptions opt;
  opt.profile = argc > 1 ? argv[1] : "full";
  opt.jobs = argc > 2 ? static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10))
                      : std::max(1u, std::thread::hardware_concurrency());
  try {
    const tracecodes::VerifyReport r = tracecodes::verify_all(opt);
    double total = 0;
    for (const auto& c : r.criteria) {
      std::printf("%s criterion %2d %-20s %7.2fs  %s\n", c.pass ? "PASS" : "FAIL", c.id,
                  c.name.c_str(), c.wall_seconds, c.summary.c_str());
      total += c.wall_seconds;
    }
    std::printf("%s profile=%s seed=%llu total=%.2fs\n", r.pass ? "PASS" : "FAIL",
                r.profile.c_str(), static_cast<unsigned long long>(r.seed), total);
    return r.pass ? EXIT_SUCCESS : EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }
}
