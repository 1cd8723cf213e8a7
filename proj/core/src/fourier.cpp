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

#include <cmath>

#include "internal.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/sheaf.hpp"

namespace tracecodes {

namespace {

bool is_excluded(const FieldSpec& k, const SheafDescriptor& d) {
  const auto* ask = std::get_if<AskDescriptor>(&d.value);
  if (ask == nullptr) return false;
  if (ask_reduce(k, scale(k, ask->f1, ask->psi_a)).degree() != 1) return false;
  const MultiplicativeCharacter chi(k, ask->chi_m);
  return chi.is_trivial() || kummer_reduce(k, ask->f2, chi.order()).empty();
}

}  // namespace

TraceSample fourier_transform(const TraceSample& s, FieldElement psi_a) {
  const FieldSpec& k = s.spec;
  require(psi_a.code != 0 && k.contains(psi_a),
          "fourier_transform: additive character must be nontrivial");
  if (s.descriptor) {
    require(!is_excluded(k, *s.descriptor),
            "fourier_transform: excluded input (linear phase with trivial Kummer part)");
  }
  const std::uint64_t q = k.q();
  std::vector<Complex> extended(q, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < s.domain.size(); ++i) extended[s.domain[i].code] = s.values[i];

  const AdditiveCharacter psi(k, psi_a);
  const double norm = -1.0 / std::sqrt(static_cast<double>(q));
  TraceSample out{k, {}, {}, std::nullopt, std::nullopt, true, 0, nullptr};
  out.domain.reserve(q);
  out.values.reserve(q);
  for (std::uint64_t ti = 0; ti < q; ++ti) {
    const FieldElement t = k.element(ti);
    Complex acc = 0;
    for (std::uint64_t xi = 0; xi < q; ++xi) {
      const Complex v = extended[xi];
      if (v == Complex(0.0, 0.0)) continue;
      acc += v * psi(k.mul(t, k.element(xi)));
    }
    out.domain.push_back(t);
    out.values.push_back(norm * acc);
  }
  if (s.descriptor) {
    auto desc = std::make_shared<SheafDescriptor>(
        SheafDescriptor{FourierTwistDescriptor{s.descriptor, psi_a}});
    out.descriptor_id = descriptor_id(k, *desc);
    out.descriptor = std::move(desc);
  } else {
    internal::Fnv1a h;
    h.text("fourier-raw");
    h.word(s.descriptor_id);
    h.word(psi_a.code);
    out.descriptor_id = h.value();
  }
  return out;
}

}  // namespace tracecodes
