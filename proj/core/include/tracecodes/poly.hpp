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

#ifndef TRACECODES_POLY_HPP_
#define TRACECODES_POLY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes {

// Polynomial over GF(q) with ascending coefficients and no trailing zeros.
// The zero polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);

  static Poly constant(FieldElement c) { return Poly({c}); }
  static Poly monomial(FieldElement c, int degree);
  // x - root
  static Poly linear_root(const FieldSpec& k, FieldElement root);
  static Poly x(const FieldSpec& k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(int i) const;
  FieldElement leading() const;

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  void normalize();
  std::vector<FieldElement> coeffs_;
};

Poly add(const FieldSpec& k, const Poly& a, const Poly& b);
Poly sub(const FieldSpec& k, const Poly& a, const Poly& b);
Poly neg(const FieldSpec& k, const Poly& a);
Poly mul(const FieldSpec& k, const Poly& a, const Poly& b);
Poly scale(const FieldSpec& k, const Poly& a, FieldElement c);
Poly pow(const FieldSpec& k, const Poly& a, unsigned e);
// Quotient and remainder; throws PreconditionError when b is zero.
std::pair<Poly, Poly> divmod(const FieldSpec& k, const Poly& a, const Poly& b);
Poly mod(const FieldSpec& k, const Poly& a, const Poly& b);
Poly monic(const FieldSpec& k, const Poly& a);
// Monic gcd (zero when both inputs are zero).
Poly gcd(const FieldSpec& k, const Poly& a, const Poly& b);
Poly derivative(const FieldSpec& k, const Poly& a);
FieldElement eval(const FieldSpec& k, const Poly& a, FieldElement x);
// base^e mod m with a 64-bit exponent.
Poly pow_mod(const FieldSpec& k, const Poly& base, std::uint64_t e, const Poly& m);

struct Factor {
  Poly poly;  // monic, irreducible over k
  int multiplicity = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Factorization into monic k-irreducibles (leading constant dropped), sorted
// by (degree, coefficients). Squarefree decomposition, then distinct-degree
// and Cantor-Zassenhaus equal-degree splitting. Deterministic.
std::vector<Factor> factor(const FieldSpec& k, const Poly& a);
bool is_irreducible(const FieldSpec& k, const Poly& a);
bool is_squarefree(const FieldSpec& k, const Poly& a);
// Distinct roots in k, ascending by enumeration index.
std::vector<FieldElement> roots(const FieldSpec& k, const Poly& a);

// num / den with den monic and nonzero and gcd(num, den) = 1.
class RationalFunction {
 public:
  // Placeholder with an empty denominator; assign a normalized value before
  // use.
  RationalFunction() = default;
  // Normalizes; throws PreconditionError if den is zero.
  RationalFunction(const FieldSpec& k, Poly num, Poly den);
  static RationalFunction one(const FieldSpec& k);
  static RationalFunction polynomial(const FieldSpec& k, Poly num);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Poly num_;
  Poly den_;
};

RationalFunction mul(const FieldSpec& k, const RationalFunction& a,
                     const RationalFunction& b);
RationalFunction div(const FieldSpec& k, const RationalFunction& a,
                     const RationalFunction& b);
// numerator(x)/denominator(x), or nullopt at a pole.
std::optional<FieldElement> rational_eval(const FieldSpec& k,
                                          const RationalFunction& f,
                                          FieldElement x);

}  // namespace tracecodes

#endif  // TRACECODES_POLY_HPP_
