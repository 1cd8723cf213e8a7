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

#ifndef TRACECODES_CHARACTERS_HPP_
#define TRACECODES_CHARACTERS_HPP_

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes {

using Complex = std::complex<double>;

// e(num/den) = exp(2 pi i num/den) for 0 <= num < den, from a table.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::uint64_t den);
  std::uint64_t denominator() const { return static_cast<std::uint64_t>(table_->size()); }
  Complex operator()(std::uint64_t num) const { return (*table_)[num % table_->size()]; }

 private:
  std::shared_ptr<const std::vector<Complex>> table_;
};

// psi_a(x) = e(Tr(a x) / p).
class AdditiveCharacter {
 public:
  AdditiveCharacter(FieldSpec spec, FieldElement a);

  const FieldSpec& spec() const { return spec_; }
  FieldElement a() const { return a_; }
  bool is_trivial() const { return a_.code == 0; }
  Complex operator()(FieldElement x) const;
  // Value at x given Tr(a x) already reduced to Z/p.
  Complex from_trace(std::uint32_t t) const { return roots_(t); }

 private:
  FieldSpec spec_;
  FieldElement a_;
  RootsOfUnity roots_;
};

// chi_m(g^j) = e(m j / (q - 1)), chi_m(0) = 0. Values come from a table of
// size d, the exact order.
class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter(FieldSpec spec, std::uint64_t m);
  // The character of exact order d with index (q - 1)/d; d must divide q - 1.
  static MultiplicativeCharacter of_order(FieldSpec spec, std::uint64_t d);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  Complex operator()(FieldElement x) const;
  // chi(g^j) for a known discrete log j.
  Complex from_log(std::uint64_t j) const;

 private:
  FieldSpec spec_;
  std::uint64_t m_;
  std::uint64_t order_;
  RootsOfUnity roots_;
};

Complex eval_additive(const AdditiveCharacter& psi, FieldElement x);
Complex eval_multiplicative(const MultiplicativeCharacter& chi, FieldElement x);
// Sum of psi over all of k.
Complex char_sum_additive(const AdditiveCharacter& psi);

}  // namespace tracecodes

#endif  // TRACECODES_CHARACTERS_HPP_
