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

#include "tracecodes/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

// Plans are created once per (length, sign) and reused with the new-array
// execute interface. Planning is serialized; execution is thread-safe.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find({n, sign});
    if (it != plans_.end()) return it->second;
    std::vector<fftw_complex> a(static_cast<std::size_t>(n));
    std::vector<fftw_complex> b(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, a.data(), b.data(),
                                      sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(std::make_pair(n, sign), plan);
    return plan;
  }
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void cyclic_dft(std::span<const Complex> in, std::span<Complex> out, int sign) {
  require(in.size() == out.size() && !in.empty(), "cyclic_dft: size mismatch");
  require(sign == 1 || sign == -1, "cyclic_dft: sign must be +1 or -1");
  const int n = static_cast<int>(in.size());
  fftw_plan plan = cache().get(n, sign);
  std::vector<Complex> scratch(in.begin(), in.end());
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(scratch.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace tracecodes
