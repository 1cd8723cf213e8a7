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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/poly.hpp"

namespace tracecodes {
namespace {

Poly P(const FieldSpec& k, std::vector<std::int64_t> c) {
  std::vector<FieldElement> e;
  for (auto v : c) e.push_back(k.from_int(v));
  return Poly(std::move(e));
}

Poly random_poly(const FieldSpec& k, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, k.q() - 1);
  std::vector<FieldElement> c;
  for (int i = 0; i <= degree; ++i) c.push_back(k.element(pick(rng)));
  return Poly(std::move(c));
}

TEST(RationalEval, Examples) {
  const FieldSpec k5 = FieldSpec::build(5);
  const RationalFunction sq = RationalFunction::polynomial(k5, P(k5, {0, 0, 1}));
  EXPECT_EQ(rational_eval(k5, sq, k5.element(3)), k5.element(4));
  const RationalFunction inv(k5, P(k5, {1}), P(k5, {0, 1}));
  EXPECT_FALSE(rational_eval(k5, inv, k5.zero()).has_value());
  const FieldSpec k7 = FieldSpec::build(7);
  const RationalFunction f(k7, P(k7, {1, 1}), P(k7, {-1, 1}));
  EXPECT_EQ(rational_eval(k7, f, k7.element(2)), k7.element(3));
}

TEST(RationalFunction, NormalizesToCoprimeMonicDenominator) {
  const FieldSpec k = FieldSpec::build(7);
  // (2x^2 - 2) / (2x - 2) = x + 1.
  const RationalFunction f(k, P(k, {-2, 0, 2}), P(k, {-2, 2}));
  EXPECT_EQ(f.num(), P(k, {1, 1}));
  EXPECT_EQ(f.den(), P(k, {1}));
  EXPECT_THROW(RationalFunction(k, P(k, {1}), Poly()), PreconditionError);
}

TEST(Poly, ZeroHasNoCoefficients) {
  const FieldSpec k = FieldSpec::build(5);
  EXPECT_TRUE(P(k, {0, 0, 5}).is_zero());
  EXPECT_EQ(P(k, {1, 2, 0}).degree(), 1);
}

TEST(Poly, DivmodReconstructs) {
  const FieldSpec k = FieldSpec::build(3, 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(k, 7, rng);
    Poly b = random_poly(k, 3, rng);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(k, a, b);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_EQ(add(k, mul(k, q, b), r), a);
  }
}

TEST(Poly, EvalMatchesHorner) {
  const FieldSpec k = FieldSpec::build(101);
  const std::vector<std::int64_t> c = {3, 0, 7, 100, 1};
  for (std::int64_t x = 0; x < 101; ++x) {
    EXPECT_EQ(eval(k, P(k, c), k.element(x)).code,
              static_cast<std::uint64_t>(oracle::eval(c, x, 101)));
  }
}

TEST(Factor, ProductOfFactorsIsMonicInput) {
  for (auto [p, n] : {std::pair{5u, 1u}, {2u, 3u}, {3u, 2u}, {101u, 1u}}) {
    const FieldSpec k = FieldSpec::build(p, n);
    std::mt19937_64 rng(p + n);
    for (int i = 0; i < 60; ++i) {
      const Poly a = random_poly(k, 1 + i % 7, rng);
      if (a.degree() < 1) continue;
      Poly prod = Poly::constant(k.one());
      for (const auto& f : factor(k, a)) {
        ASSERT_TRUE(is_irreducible(k, f.poly));
        ASSERT_EQ(f.poly.leading(), k.one());
        prod = mul(k, prod, pow(k, f.poly, static_cast<unsigned>(f.multiplicity)));
      }
      ASSERT_EQ(prod, monic(k, a));
    }
  }
}

TEST(Factor, Example) {
  const FieldSpec k = FieldSpec::build(5);
  // x^2 (x + 1) over F_5.
  const auto f = factor(k, P(k, {0, 0, 1, 1}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].poly, P(k, {0, 1}));
  EXPECT_EQ(f[0].multiplicity, 2);
  EXPECT_EQ(f[1].poly, P(k, {1, 1}));
  EXPECT_EQ(f[1].multiplicity, 1);
}

TEST(Roots, MatchExhaustiveSearch) {
  const FieldSpec k = FieldSpec::build(2, 4);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(k, 5, rng);
    if (a.is_zero()) continue;
    std::vector<FieldElement> expect;
    for (std::uint64_t x = 0; x < k.q(); ++x) {
      if (eval(k, a, k.element(x)) == k.zero()) expect.push_back(k.element(x));
    }
    EXPECT_EQ(roots(k, a), expect);
  }
}

TEST(Irreducible, CountMatchesNecklaceFormula) {
  // Monic irreducible quadratics over F_p: (p^2 - p) / 2.
  const FieldSpec k = FieldSpec::build(7);
  int count = 0;
  for (std::int64_t a = 0; a < 7; ++a) {
    for (std::int64_t b = 0; b < 7; ++b) count += is_irreducible(k, P(k, {b, a, 1})) ? 1 : 0;
  }
  EXPECT_EQ(count, 21);
}

TEST(Poly, GcdAndDerivative) {
  const FieldSpec k = FieldSpec::build(7);
  const Poly a = mul(k, P(k, {1, 1}), P(k, {2, 1}));
  const Poly b = mul(k, P(k, {1, 1}), P(k, {3, 1}));
  EXPECT_EQ(gcd(k, a, b), P(k, {1, 1}));
  EXPECT_EQ(derivative(k, P(k, {5, 1, 1, 1})), P(k, {1, 2, 3}));
  EXPECT_TRUE(derivative(k, P(k, {0, 0, 0, 0, 0, 0, 0, 1})).is_zero());
  EXPECT_FALSE(is_squarefree(k, mul(k, a, a)));
}

}  // namespace
}  // namespace tracecodes
