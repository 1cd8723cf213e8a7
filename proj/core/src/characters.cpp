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

#include "tracecodes/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "tracecodes/errors.hpp"
#include "internal.hpp"

namespace tracecodes {

RootsOfUnity::RootsOfUnity(std::uint64_t den) {
  require(den >= 1, "roots of unity: zero denominator");
  auto table = std::make_shared<std::vector<Complex>>(den);
  for (std::uint64_t j = 0; j < den; ++j) {
    // Exact values on the axes so that real characters stay real.
    if (4 * j % den == 0) {
      static constexpr double kRe[4] = {1, 0, -1, 0};
      static constexpr double kIm[4] = {0, 1, 0, -1};
      const auto quarter = 4 * j / den;
      (*table)[j] = Complex(kRe[quarter], kIm[quarter]);
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(den);
    (*table)[j] = std::polar(1.0, angle);
  }
  table_ = std::move(table);
}

AdditiveCharacter::AdditiveCharacter(FieldSpec spec, FieldElement a)
    : spec_(std::move(spec)), a_(a), roots_(spec_.p()) {
  require(spec_.contains(a), "additive character: parameter outside the field");
}

Complex AdditiveCharacter::operator()(FieldElement x) const {
  if (a_.code == 0) return Complex(1.0, 0.0);
  return roots_(spec_.trace(spec_.mul(a_, x)));
}

namespace {
std::uint64_t order_of_index(std::uint64_t m, std::uint64_t group) {
  return group / std::gcd(m % group == 0 ? group : m % group, group);
}
}  // namespace

MultiplicativeCharacter::MultiplicativeCharacter(FieldSpec spec, std::uint64_t m)
    : spec_(std::move(spec)),
      m_(m % (spec_.q() - 1)),
      order_(order_of_index(m_, spec_.q() - 1)),
      roots_(order_) {}

MultiplicativeCharacter MultiplicativeCharacter::of_order(FieldSpec spec,
                                                          std::uint64_t d) {
  const std::uint64_t group = spec.q() - 1;
  require(d >= 1 && group % d == 0,
          "multiplicative character: order must divide q - 1");
  return MultiplicativeCharacter(std::move(spec), group / d);
}

Complex MultiplicativeCharacter::from_log(std::uint64_t j) const {
  if (order_ == 1) return Complex(1.0, 0.0);
  // m j / (q - 1) = (m / step) j / d with step = (q - 1) / d.
  const std::uint64_t step = (spec_.q() - 1) / order_;
  const internal::Uint128 num =
      static_cast<internal::Uint128>(m_ / step) * (j % order_);
  return roots_(static_cast<std::uint64_t>(num % order_));
}

Complex MultiplicativeCharacter::operator()(FieldElement x) const {
  if (x.code == 0) return Complex(0.0, 0.0);
  if (order_ == 1) return Complex(1.0, 0.0);
  return from_log(spec_.discrete_log(x));
}

Complex eval_additive(const AdditiveCharacter& psi, FieldElement x) { return psi(x); }

Complex eval_multiplicative(const MultiplicativeCharacter& chi, FieldElement x) {
  return chi(x);
}

Complex char_sum_additive(const AdditiveCharacter& psi) {
  const FieldSpec& k = psi.spec();
  Complex sum = 0;
  for (std::uint64_t i = 0; i < k.q(); ++i) sum += psi(k.element(i));
  return sum;
}

}  // namespace tracecodes
