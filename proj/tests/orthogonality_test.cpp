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
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/orthogonality.hpp"

namespace tracecodes {
namespace {

Poly P(const FieldSpec& k, std::vector<std::int64_t> c) {
  std::vector<FieldElement> e;
  for (auto v : c) e.push_back(k.from_int(v));
  return Poly(std::move(e));
}

TraceSample ask(const FieldSpec& k, std::vector<std::int64_t> f1) {
  return trace_ask(k, make_ask(k, P(k, std::move(f1))));
}

std::vector<TraceSample> family_samples(const AskClassFamily& fam) {
  std::vector<TraceSample> out;
  for (std::uint64_t i = 0; i < fam.size(); ++i) out.push_back(trace_ask(fam.field(), fam.at(i)));
  return out;
}

TEST(InnerProduct, Examples) {
  const FieldSpec k = FieldSpec::build(5);
  const TraceSample a = ask(k, {0, 0, 1});
  EXPECT_NEAR(std::abs(inner_product(a, a) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(a, ask(k, {0, 1}))), 1 / std::sqrt(5.0), 1e-12);
}

TEST(InnerProduct, DisjointSupportIsZero) {
  const FieldSpec k = FieldSpec::build(5);
  TraceSample a = ask(k, {0, 0, 1});
  TraceSample b = a;
  a.domain = {k.element(0), k.element(1)};
  a.values.resize(2);
  b.domain = {k.element(2), k.element(3), k.element(4)};
  b.values.erase(b.values.begin(), b.values.begin() + 2);
  EXPECT_EQ(inner_product(a, b), Complex(0));
}

TEST(InnerProduct, NormMatchesRealEmbedding) {
  const FieldSpec k = FieldSpec::build(31);
  const TraceSample a = trace_supermorse(k, P(k, {0, 1, 0, 1}));
  double real_norm = 0;
  for (auto v : a.values) real_norm += v.real() * v.real() + v.imag() * v.imag();
  EXPECT_NEAR(inner_product(a, a).real(), real_norm / 31, 1e-12);
  EXPECT_NEAR(inner_product(a, a).imag(), 0.0, 1e-12);
}

TEST(VerifyGram, AllPairsOverF101) {
  const FieldSpec k = FieldSpec::build(101);
  std::vector<TraceSample> samples;
  for (std::int64_t a2 = 0; a2 < 101; a2 += 10) {
    for (std::int64_t a1 = 0; a1 < 101; a1 += 25) samples.push_back(ask(k, {0, a1, a2}));
  }
  const GramReport r = verify_gram(samples, default_iso_oracle());
  EXPECT_EQ(r.violations, 0u);
  EXPECT_LT(r.max_hermitian_defect, 1e-12);
  for (const auto& d : r.diagonal) EXPECT_EQ(d.value, Complex(1.0));
  for (const auto& p : r.pairs) {
    EXPECT_EQ(p.pass, p.isomorphic || std::abs(p.value) <= p.bound * (1 + 1e-9));
  }
}

TEST(VerifyGram, SingleTrivialSheaf) {
  const FieldSpec k = FieldSpec::build(13);
  const GramReport r = verify_gram({ask(k, {})}, default_iso_oracle());
  ASSERT_EQ(r.diagonal.size(), 1u);
  EXPECT_EQ(r.diagonal[0].value, Complex(1.0));
  EXPECT_EQ(r.violations, 0u);
}

TEST(VerifyGram, MislabeledConductorIsCaught) {
  // Weil keeps degree-3 pairs under 2/sqrt(q), inside even the c = 1 bound,
  // so the mislabel needs a high-degree member: |1 + 10 e(1/11)| > 3 sqrt(11).
  const FieldSpec k = FieldSpec::build(11);
  std::vector<std::int64_t> top(11, 0);
  top[10] = 1;
  const std::vector<TraceSample> some = {ask(k, {}), ask(k, top)};
  const double oracle_sum = std::abs(1.0 + 10.0 * oracle::e(1.0 / 11));
  ASSERT_GT(oracle_sum, 3 * std::sqrt(11.0));
  GramOptions opt;
  opt.conductor_override = 1;
  const GramReport r = verify_gram(some, default_iso_oracle(), opt);
  ASSERT_EQ(r.violations, 1u);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_FALSE(r.pairs[0].pass);
  EXPECT_NEAR(std::abs(r.pairs[0].value), oracle_sum / 11, 1e-12);
  const GramReport honest = verify_gram(some, default_iso_oracle());
  EXPECT_EQ(honest.violations, 0u);
}

TEST(VerifyGram, RefusesMixedDomainsWithoutForce) {
  const FieldSpec k = FieldSpec::build(13);
  const TraceSample a = ask(k, {0, 0, 1});
  const TraceSample b = trace_ask(k, make_ask(k, Poly(), RationalFunction(k, P(k, {0, 1}), P(k, {1})),
                                              k.one(), 6));
  EXPECT_THROW(verify_gram({a, b}, default_iso_oracle()), PreconditionError);
  GramOptions opt;
  opt.force = true;
  EXPECT_EQ(verify_gram({a, b}, default_iso_oracle(), opt).domain_size, 12u);
}

TEST(H1Bound, Examples) {
  EXPECT_EQ(h1_bound(3, 1, 1, 1), 7);
  EXPECT_EQ(h1_bound(1, 1, 1, 1), 3);
  EXPECT_EQ(h1_bound(4, 2, 2, 3), 60);
}

TEST(Embed, Examples) {
  const FieldSpec k = FieldSpec::build(5);
  const TraceSample a = ask(k, {0, 0, 1});
  TraceSample ia = a;
  for (auto& v : ia.values) v *= Complex(0, 1);
  const EmbeddedCode code = embed({a, a, ia, ask(k, {0, 1})});
  EXPECT_EQ(code.dimension, 10u);
  for (const auto& v : code.vectors) {
    double n2 = 0;
    for (double x : v) n2 += x * x;
    EXPECT_NEAR(n2, 1.0, 1e-12);
  }
  EXPECT_NEAR(code.cosine[0][1], 1.0, 1e-12);
  EXPECT_NEAR(code.cosine[0][2], 0.0, 1e-12);
  EXPECT_NEAR(code.cosine[0][3], inner_product(a, ask(k, {0, 1})).real(), 1e-12);
  EXPECT_LE(std::abs(code.cosine[0][3]), 1 / std::sqrt(5.0) + 1e-12);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(code.cosine[i][j], code.cosine[j][i]);
  }
}

TEST(CodeReport, ChainArithmeticAt1369) {
  const FieldSpec k = FieldSpec::build(37, 2);
  const std::vector<TraceSample> samples = {trace_ask(k, make_ask(k, P(k, {0, 0, 1}))),
                                            trace_ask(k, make_ask(k, P(k, {0, 1, 1})))};
  const CodeReport r = code_report(samples, 3, 1, default_iso_oracle());
  EXPECT_NEAR(r.cosine_bound, 18.0 / 37, 1e-15);
  EXPECT_NEAR(r.chain_bound, 3 * std::sqrt(10.0) * 3 / std::sqrt(2.0 * 1369), 1e-15);
  EXPECT_NEAR(r.chain_bound, 0.54391, 1e-5);
  EXPECT_TRUE(r.chain_ok);
  EXPECT_TRUE(r.pass);
}

TEST(CodeReport, SingleSampleIsVacuous) {
  const FieldSpec k = FieldSpec::build(1373);
  const CodeReport r = code_report({ask(k, {0, 0, 1})}, 3, 1, default_iso_oracle());
  EXPECT_EQ(r.pairs_checked, 0u);
  EXPECT_TRUE(r.pass);
}

TEST(CodeReport, ChainHoldsUpToFiveQuartersQ) {
  // 6 c r^2 / sqrt(q) <= 3 sqrt(10) c r^2 / sqrt(2 |U|) iff |U| <= 5q/4.
  for (double q : {1373.0, 20807.0}) {
    const double lhs = 6 / std::sqrt(q);
    EXPECT_LE(lhs, 3 * std::sqrt(10.0) / std::sqrt(2 * 1.25 * q) * (1 + 1e-12));
    EXPECT_GT(lhs, 3 * std::sqrt(10.0) / std::sqrt(2 * 1.26 * q));
  }
}

TEST(Injectivity, PhaseRotationIsProportional) {
  const FieldSpec k = FieldSpec::build(331);
  const TraceSample a = ask(k, {0, 0, 1});
  TraceSample b = a;
  for (auto& v : b.values) v *= std::polar(1.0, 0.7);
  b.descriptor_id = a.descriptor_id + 1;
  b.descriptor = nullptr;
  const InjectivityReport r = injectivity_check({a, b}, default_iso_oracle());
  EXPECT_EQ(r.proportional_pairs, 1u);
  EXPECT_EQ(r.failures, 1u);
}

TEST(Injectivity, IsomorphicRawFormsAgree) {
  const FieldSpec k = FieldSpec::build(331);
  // x^2 and x^2 + 5 differ by a constant: the traces differ by the phase
  // psi(5).
  const auto r = injectivity_check({ask(k, {0, 0, 1}), trace_ask(k, make_ask(k, P(k, {5, 0, 1})))},
                                   default_iso_oracle());
  EXPECT_EQ(r.proportional_pairs, 1u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_TRUE(r.pass);
}

TEST(Injectivity, RequiresLargeField) {
  const FieldSpec k = FieldSpec::build(101);
  EXPECT_THROW(injectivity_check({ask(k, {0, 0, 1}), ask(k, {0, 1})}, default_iso_oracle()),
               PreconditionError);
}

// The structured routes go through difference classes and DFTs; the direct
// routes evaluate explicit samples pair by pair.
class FamilyRoutes : public ::testing::TestWithParam<std::tuple<std::uint32_t, std::uint32_t, int, bool>> {};

TEST_P(FamilyRoutes, GramMatchesDirectEvaluation) {
  const auto [p, n, c, quad] = GetParam();
  const FieldSpec k = FieldSpec::build(p, n);
  const AskClassFamily fam(k, c, quad ? (k.q() - 1) / 2 : 0);
  const FamilyGramReport rep = verify_gram_family(fam, 2);
  const auto samples = family_samples(fam);
  double max_off = 0;
  double dmin = 10;
  double dmax = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = inner_product(samples[i], samples[i]).real();
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      max_off = std::max(max_off, std::abs(inner_product(samples[i], samples[j])));
    }
  }
  EXPECT_NEAR(rep.max_offdiagonal, max_off, 1e-9);
  EXPECT_NEAR(rep.diagonal_min, dmin, 1e-12);
  EXPECT_NEAR(rep.diagonal_max, dmax, 1e-12);
  EXPECT_EQ(rep.diagonal_expected,
            static_cast<double>(fam.domain_size()) / static_cast<double>(k.q()));
  EXPECT_EQ(rep.family_size, samples.size());
  EXPECT_TRUE(rep.pass);
}

TEST_P(FamilyRoutes, CodeMatchesDirectEvaluation) {
  const auto [p, n, c, quad] = GetParam();
  const FieldSpec k = FieldSpec::build(p, n);
  const AskClassFamily fam(k, c, quad ? (k.q() - 1) / 2 : 0);
  const FamilyCodeReport rep = code_report_family(fam, 1, 500, 9);
  const CodeReport direct = code_report(family_samples(fam), c, 1, default_iso_oracle());
  EXPECT_NEAR(rep.chain.max_cosine, direct.max_cosine, 1e-9);
  EXPECT_EQ(rep.chain.violations, direct.violations);
  EXPECT_LT(rep.max_route_discrepancy, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(SmallFamilies, FamilyRoutes,
                         ::testing::Values(std::tuple{13u, 1u, 3, false},
                                           std::tuple{13u, 1u, 3, true},
                                           std::tuple{3u, 2u, 3, false},
                                           std::tuple{5u, 2u, 3, true},
                                           std::tuple{7u, 1u, 4, false}));

TEST(FamilyGram, QuadraticDiagonalIsDomainFraction) {
  const FieldSpec k = FieldSpec::build(101);
  const FamilyGramReport rep = verify_gram_family(AskClassFamily(k, 3, 50));
  EXPECT_EQ(rep.diagonal_min, 100.0 / 101);
  EXPECT_EQ(rep.diagonal_max, 100.0 / 101);
  EXPECT_TRUE(rep.diagonal_within_bound);
  EXPECT_EQ(rep.violation_count, 0u);
}

TEST(FamilyGram, TrivialDiagonalIsExactlyOne) {
  const FieldSpec k = FieldSpec::build(101);
  const FamilyGramReport rep = verify_gram_family(AskClassFamily(k, 3, 0));
  EXPECT_EQ(rep.diagonal_min, 1.0);
  EXPECT_EQ(rep.diagonal_max, 1.0);
  EXPECT_LE(rep.max_offdiagonal, 9 / std::sqrt(101.0));
}

TEST(FamilyInjectivity, F331NoProportionalPairs) {
  const FieldSpec k = FieldSpec::build(331);
  const FamilyInjectivityReport rep = injectivity_check_family(AskClassFamily(k, 3, 0), 2);
  EXPECT_TRUE(rep.precondition_ok);
  EXPECT_EQ(rep.proportional, 0u);
  EXPECT_LT(rep.max_ratio, 1.0);
  EXPECT_THROW(injectivity_check_family(AskClassFamily(FieldSpec::build(101), 3, 0)),
               PreconditionError);
}

TEST(FamilyInjectivity, MatchesDirectCheck) {
  const FieldSpec k = FieldSpec::build(331);
  const AskClassFamily fam(k, 2, 165);
  const InjectivityReport direct = injectivity_check(family_samples(fam), default_iso_oracle());
  EXPECT_EQ(injectivity_check_family(fam).proportional, direct.proportional_pairs);
}

TEST(DifferenceBlocks, CountAndCoverage) {
  const FieldSpec k = FieldSpec::build(7);
  const AskClassFamily fam(k, 4, 0);
  std::size_t seen = 0;
  std::size_t reported = 0;
  for_each_difference(
      fam, 1,
      [&](std::size_t, const DifferenceBlock&, const std::vector<Complex>& values) {
        seen += values.size();
      },
      &reported);
  EXPECT_EQ(reported, difference_block_count(fam));
  EXPECT_EQ(seen, 343u);
}

}  // namespace
}  // namespace tracecodes
