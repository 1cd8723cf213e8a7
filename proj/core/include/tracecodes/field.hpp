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

// Exact arithmetic in GF(p^n).
//
// An element is a coefficient vector (c_0, ..., c_{n-1}) over Z/p in the
// basis 1, t, ..., t^{n-1}, where t is a root of the field's monic modulus.
// FieldElement stores that vector as a single integer code
//
//     code = c_0 * p^(n-1) + c_1 * p^(n-2) + ... + c_{n-1},
//
// so that enumerating codes 0, 1, ..., q-1 walks the elements in
// lexicographic order of their coefficient vectors. Every domain of every
// trace sample uses this order.
//
// Elements carry no reference to their field; all arithmetic goes through a
// FieldSpec. A FieldSpec is an immutable value whose lookup tables are shared
// between copies, so it can be passed by value and used from many threads.

#ifndef TRACECODES_FIELD_HPP_
#define TRACECODES_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace tracecodes {

struct FieldElement {
  std::uint64_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

struct FieldOptions {
  // Fields with q above this cap skip the log/antilog tables; multiplication
  // then runs on polynomials and discrete logs use baby-step giant-step.
  std::uint64_t table_cap = std::uint64_t{1} << 22;
};

class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxPrime = std::uint32_t{1} << 20;

  // Builds GF(p^n). Without a modulus, the first monic irreducible of degree
  // n in lexicographic coefficient order is used. The generator is the first
  // element in enumeration order of multiplicative order q - 1.
  // Throws PreconditionError for non-prime p or a reducible modulus.
  static FieldSpec build(std::uint32_t p, std::uint32_t n = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = {},
                         FieldOptions options = {});

  std::uint32_t p() const;
  std::uint32_t n() const;
  std::uint64_t q() const;
  // Ascending coefficients, length n + 1, last entry 1.
  std::span<const std::uint32_t> modulus() const;
  FieldElement generator() const;
  bool has_tables() const;
  bool is_prime_field() const { return n() == 1; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const;
  // Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t value) const;
  // The element with enumeration index `index` (0 <= index < q).
  FieldElement element(std::uint64_t index) const;
  bool contains(FieldElement x) const { return x.code < q(); }

  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  std::uint32_t coeff(FieldElement x, std::uint32_t i) const;
  // Defined only for elements of the prime subfield.
  std::uint32_t to_prime(FieldElement x) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  // Throws PreconditionError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement frobenius(FieldElement a) const;          // a^p
  FieldElement frobenius_inverse(FieldElement a) const;  // a^(p^(n-1))

  // Absolute trace to Z/p: a + a^p + ... + a^(p^(n-1)).
  std::uint32_t trace(FieldElement a) const;
  // Returns j in [0, q-2] with generator^j = a. Throws on zero.
  std::uint64_t discrete_log(FieldElement a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Impl;
  explicit FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Primality by trial division; inputs are desk-scale.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace tracecodes

#endif  // TRACECODES_FIELD_HPP_
