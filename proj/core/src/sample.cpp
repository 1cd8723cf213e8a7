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

#include <algorithm>

#include "internal.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/sheaf.hpp"

namespace tracecodes {

namespace {

// f(x + t) by Horner's rule.
Poly shift(const FieldSpec& k, const Poly& f, FieldElement t) {
  const Poly xt({t, k.one()});
  Poly g;
  for (int i = f.degree(); i >= 0; --i) g = add(k, mul(k, g, xt), Poly::constant(f.coeff(i)));
  return g;
}

// Representative of f modulo x -> u x + t: center so that the x^{n-1}
// coefficient vanishes, then take the smallest coefficient vector over all
// rescalings, compared from the top degree down.
Poly affine_canonical(const FieldSpec& k, const Poly& f) {
  const int n = f.degree();
  if (n < 1) return f;
  Poly g = f;
  if (static_cast<std::uint64_t>(n) % k.p() != 0) {
    const FieldElement t =
        k.neg(k.div(f.coeff(n - 1), k.mul(k.from_int(n), f.leading())));
    g = shift(k, f, t);
  }
  std::vector<FieldElement> best;
  for (std::uint64_t i = 1; i < k.q(); ++i) {
    const FieldElement u = k.element(i);
    std::vector<FieldElement> cand(static_cast<std::size_t>(n + 1));
    FieldElement power = k.one();
    for (int j = 0; j <= n; ++j) {
      cand[static_cast<std::size_t>(j)] = k.mul(g.coeff(j), power);
      power = k.mul(power, u);
    }
    const bool smaller =
        best.empty() ||
        std::lexicographical_compare(cand.rbegin(), cand.rend(), best.rbegin(), best.rend());
    if (smaller) best = std::move(cand);
  }
  return Poly(std::move(best));
}

}  // namespace

std::uint64_t descriptor_id(const FieldSpec& k, const SheafDescriptor& d) {
  internal::Fnv1a h;
  h.field(k);
  if (const auto* ask = std::get_if<AskDescriptor>(&d.value)) {
    h.text("ask");
    h.poly(ask_reduce(k, scale(k, ask->f1, ask->psi_a)));
    const MultiplicativeCharacter chi(k, ask->chi_m);
    const auto kummer = chi.is_trivial() ? std::vector<Factor>{}
                                         : kummer_reduce(k, ask->f2, chi.order());
    if (!kummer.empty()) {
      h.word(chi.m());
      for (const auto& f : kummer) {
        h.poly(f.poly);
        h.word(static_cast<std::uint64_t>(f.multiplicity));
      }
    }
  } else if (const auto* sm = std::get_if<SupermorseDescriptor>(&d.value)) {
    h.text("supermorse");
    h.poly(affine_canonical(k, sm->f));
  } else {
    const auto& ft = std::get<FourierTwistDescriptor>(d.value);
    h.text("fourier");
    h.word(ft.inner ? descriptor_id(k, *ft.inner) : 0);
    h.word(ft.psi_a.code);
  }
  return h.value();
}

std::string kind_name(const SheafDescriptor& d) {
  switch (d.value.index()) {
    case 0:
      return "ask";
    case 1:
      return "supermorse";
    default:
      return "fourier";
  }
}

TraceSample make_sample(const FieldSpec& k, const SheafDescriptor& d) {
  if (const auto* ask = std::get_if<AskDescriptor>(&d.value)) return trace_ask(k, *ask);
  if (const auto* sm = std::get_if<SupermorseDescriptor>(&d.value)) {
    return trace_supermorse(k, sm->f);
  }
  const auto& ft = std::get<FourierTwistDescriptor>(d.value);
  require(ft.inner != nullptr, "fourier twist: missing inner descriptor");
  return fourier_transform(make_sample(k, *ft.inner), ft.psi_a);
}

}  // namespace tracecodes
