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

// A finite family of trace functions organized in orbits, for computing
// sum_x K(x) phi(x) against every member at once.
//
// Additive orbit:    K_a(x) = B(x) psi(a x), a in k.
// Translation orbit: K_t(x) = G(x - t) off the translated singular set,
//                    t in k, with G(y) = #{f = y} - 1.
//
// On prime fields each orbit costs one cyclic DFT of length q; on other
// fields the sums are evaluated directly.

#ifndef TRACECODES_KERNEL_FAMILY_HPP_
#define TRACECODES_KERNEL_FAMILY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tracecodes/sheaf.hpp"

namespace tracecodes {

struct KernelOrbit {
  enum class Kind { kAdditive, kTranslation };
  Kind kind = Kind::kAdditive;
  std::string label;
  // Additive: B on k (zero off the domain). Translation: G on k.
  std::vector<Complex> base;
  // Additive only: restrict to a = 0.
  bool only_zero = false;
  // Conductors: additive orbits use cond_zero at a = 0 and cond_other
  // elsewhere; translation orbits use cond_other throughout.
  int cond_zero = 1;
  int cond_other = 1;
  // Translation only: rational singular values of the base kernel.
  std::vector<FieldElement> singular;
  // Descriptor of the member at parameter 0, used to materialize samples.
  SheafDescriptor descriptor;
  std::uint64_t members() const;
  std::uint64_t q = 0;
};

struct CorrelationSummary {
  double max_ratio = 0;  // max |sum K phi| / cond^s
  double max_abs = 0;    // max |sum K phi|
  std::string argmax_orbit;
  std::uint64_t argmax_param = 0;
  int argmax_conductor = 1;
  std::uint64_t kernels = 0;
};

class KernelFamily {
 public:
  // ASK classes of conductor <= c_max for trivial chi and, for odd q, the
  // quadratic chi (on G_m), plus every supermorse polynomial of degree 2 and
  // 3 up to x -> ux + t (when p > 3).
  static KernelFamily standard(const FieldSpec& k, int c_max);

  const FieldSpec& field() const { return k_; }
  const std::vector<KernelOrbit>& orbits() const { return orbits_; }
  std::uint64_t size() const;
  nlohmann::json manifest() const;

  CorrelationSummary correlate(const std::vector<Complex>& phi, double s) const;
  // Every member as an explicit sample, in orbit order then parameter order.
  std::vector<TraceSample> materialize() const;

 private:
  explicit KernelFamily(FieldSpec k) : k_(std::move(k)) {}
  FieldSpec k_;
  int c_max_ = 0;
  std::vector<KernelOrbit> orbits_;
  std::vector<std::vector<Complex>> base_hat_;  // per translation orbit
};

}  // namespace tracecodes

#endif  // TRACECODES_KERNEL_FAMILY_HPP_
