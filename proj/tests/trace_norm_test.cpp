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

#include <gtest/gtest.h>

#include "tracecodes/errors.hpp"
#include "tracecodes/kernel_family.hpp"
#include "tracecodes/trace_norm.hpp"

namespace tracecodes {
namespace {

Poly P(const FieldSpec& k, std::vector<std::int64_t> c) {
  std::vector<FieldElement> e;
  for (auto v : c) e.push_back(k.from_int(v));
  return Poly(std::move(e));
}

// max |sum_x K(x) phi(x)| / cond^s over explicit samples, extended by zero.
double direct_max_ratio(const std::vector<Complex>& phi, const std::vector<TraceSample>& fam,
                        double s) {
  double best = 0;
  for (const auto& K : fam) {
    Complex acc = 0;
    for (std::size_t j = 0; j < K.domain.size(); ++j) acc += K.values[j] * phi[K.domain[j].code];
    best = std::max(best, std::abs(acc) / std::pow(static_cast<double>(*K.conductor), s));
  }
  return best;
}

TEST(RandomFunction, ReproducibleRademacher) {
  const FieldSpec k = FieldSpec::build(5);
  const auto r = RandomFunctionSpec::rademacher(42);
  const auto a = sample_random_function(r, k);
  EXPECT_EQ(a, sample_random_function(r, k));
  EXPECT_EQ(a.size(), 5u);
  for (auto v : a) EXPECT_TRUE(v == Complex(1) || v == Complex(-1));
  EXPECT_NE(sample_random_function(r, FieldSpec::build(101), 1),
            sample_random_function(r, FieldSpec::build(101), 2));
}

TEST(RandomFunction, UniformCircleIsUnimodular) {
  const FieldSpec k = FieldSpec::build(101);
  for (auto v : sample_random_function(RandomFunctionSpec::uniform_circle(3), k)) {
    EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
  }
}

TEST(RandomFunction, TwoAtomTableMatchesRademacherMoments) {
  const auto t = RandomFunctionSpec::table({{1.0, 0.5}, {-1.0, 0.5}}, 1);
  const auto r = RandomFunctionSpec::rademacher(1);
  EXPECT_EQ(t.second_moment(), r.second_moment());
  EXPECT_EQ(t.first_absolute_moment(), r.first_absolute_moment());
  const FieldSpec k = FieldSpec::build(499);
  double mean = 0;
  for (auto v : sample_random_function(t, k)) {
    EXPECT_TRUE(v == Complex(1) || v == Complex(-1));
    mean += v.real();
  }
  EXPECT_LT(std::abs(mean / 499), 5 / std::sqrt(499.0));
}

TEST(RandomFunction, TableValidation) {
  EXPECT_THROW(RandomFunctionSpec::table({{1.0, 1.0}}, 0).validate(), PreconditionError);
  EXPECT_THROW(RandomFunctionSpec::table({{2.0, 0.5}, {-2.0, 0.5}}, 0).validate(),
               PreconditionError);
  EXPECT_THROW(RandomFunctionSpec::table({{1.0, -0.5}, {-1.0, 1.5}}, 0).validate(),
               PreconditionError);
  EXPECT_THROW(RandomFunctionSpec::table({{1.0, 0}, {-1.0, 0}}, 0).validate(), PreconditionError);
  EXPECT_NO_THROW(
      RandomFunctionSpec::table({{Complex(0, 1), 1}, {Complex(0, -1), 1}}, 0).validate());
}

TEST(TrivialNorm, Examples) {
  std::vector<Complex> delta(25, 0.0);
  delta[0] = 1;
  EXPECT_DOUBLE_EQ(trivial_norm_upper(delta), 0.2);
  EXPECT_EQ(trivial_norm_upper(std::vector<Complex>(25, 0.0)), 0.0);
  for (std::uint32_t p : {101u, 499u, 1009u}) {
    const auto phi = sample_random_function(RandomFunctionSpec::rademacher(p), FieldSpec::build(p));
    EXPECT_EQ(trivial_norm_upper(phi), std::sqrt(static_cast<double>(p)));
  }
}

TEST(KernelFamily, StandardSizes) {
  const KernelFamily f = KernelFamily::standard(FieldSpec::build(101), 3);
  std::uint64_t total = 0;
  for (const auto& o : f.orbits()) total += o.members();
  EXPECT_EQ(f.size(), total);
  EXPECT_EQ(f.manifest()["kernels"], f.size());
  EXPECT_EQ(f.size(), f.materialize().size());
  EXPECT_THROW(KernelFamily::standard(FieldSpec::build(3), 5), PreconditionError);
}

class KernelRoutes : public ::testing::TestWithParam<std::tuple<std::uint32_t, std::uint32_t, int>> {};

TEST_P(KernelRoutes, StructuredCorrelationMatchesDirect) {
  const auto [p, n, c] = GetParam();
  const FieldSpec k = FieldSpec::build(p, n);
  const KernelFamily fam = KernelFamily::standard(k, c);
  const auto samples = fam.materialize();
  for (std::uint64_t seed : {1u, 2u}) {
    const auto phi = sample_random_function(RandomFunctionSpec::uniform_circle(seed), k);
    for (double s : {0.0, 2.0, 6.0}) {
      const PhiStatistics a = phi_statistics(phi, fam, s);
      const double direct = direct_max_ratio(phi, samples, s);
      EXPECT_NEAR(a.max_correlation, direct, 1e-9 * std::max(1.0, direct));
      EXPECT_NEAR(phi_statistics(phi, samples, s).max_correlation, direct,
                  1e-9 * std::max(1.0, direct));
      EXPECT_EQ(a.kernels, samples.size());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, KernelRoutes,
                         ::testing::Values(std::tuple{13u, 1u, 2}, std::tuple{13u, 1u, 3},
                                           std::tuple{31u, 1u, 4}, std::tuple{5u, 2u, 4},
                                           std::tuple{7u, 1u, 4}, std::tuple{2u, 4u, 2}));

TEST(Certificate, RademacherEnergyIsExact) {
  const FieldSpec k = FieldSpec::build(101);
  const KernelFamily fam = KernelFamily::standard(k, 3);
  const auto phi = sample_random_function(RandomFunctionSpec::rademacher(5), k);
  const double A = 8 * std::sqrt(std::log(101.0));
  const NormCertificate c = certificate_check(phi, fam, A, 0.5, 6);
  EXPECT_EQ(c.energy, 101.0);
  EXPECT_TRUE(c.energy_ok);
  EXPECT_TRUE(c.sup_ok);
  EXPECT_DOUBLE_EQ(c.implied_bound, std::sqrt(101.0) / (A * A));
  EXPECT_EQ(c.implied_bound, implied_norm_bound(A, 0.5, 101));
  EXPECT_EQ(c.status, "conditional");
  EXPECT_EQ(c.family["kernels"], fam.size());
  if (c.certified) {
    EXPECT_LE(c.implied_bound, trivial_norm_upper(phi));
  }
}

TEST(Certificate, ZeroFunctionRejected) {
  const FieldSpec k = FieldSpec::build(101);
  const NormCertificate c =
      certificate_check(std::vector<Complex>(101, 0.0), KernelFamily::standard(k, 2), 4, 0.5, 6);
  EXPECT_FALSE(c.energy_ok);
  EXPECT_FALSE(c.certified);
}

TEST(Certificate, SelfCorrelationRejected) {
  const FieldSpec k = FieldSpec::build(499);
  const KernelFamily fam = KernelFamily::standard(k, 2);
  const TraceSample member = trace_ask(k, make_ask(k, Poly()));
  std::vector<Complex> phi(k.q(), 0.0);
  for (std::size_t j = 0; j < member.domain.size(); ++j) {
    phi[member.domain[j].code] = std::conj(member.values[j]);
  }
  for (double alpha : {1.0, 2.0, 4.0, 8.0}) {
    const NormCertificate c =
        certificate_check(phi, fam, alpha * std::sqrt(std::log(499.0)), 0.5, 6);
    EXPECT_FALSE(c.correlation_ok) << alpha;
    EXPECT_FALSE(c.certified) << alpha;
    EXPECT_GE(c.max_correlation, 499.0 - 1e-9);
  }
}

TEST(Certificate, SampleListPreconditions) {
  const FieldSpec k = FieldSpec::build(13);
  const std::vector<Complex> phi(13, 1.0);
  EXPECT_THROW(certificate_check(phi, std::vector<TraceSample>{}, 2, 0.5, 6), PreconditionError);
  TraceSample s = trace_ask(k, make_ask(k, P(k, {0, 0, 1})));
  s.conductor.reset();
  EXPECT_THROW(certificate_check(phi, {s}, 2, 0.5, 6), PreconditionError);
  EXPECT_THROW(certificate_check(std::vector<Complex>(12, 1.0),
                                 {trace_ask(k, make_ask(k, P(k, {0, 0, 1})))}, 2, 0.5, 6),
               PreconditionError);
}

TEST(Certificate, EvaluateFromStatistics) {
  PhiStatistics st;
  st.q = 10000;
  st.sup = 1;
  st.energy = 10000;
  st.max_correlation = 50;
  const NormCertificate c = evaluate_certificate(st, 2, 0.5, 6);
  EXPECT_DOUBLE_EQ(c.sup_limit, 2.0);
  EXPECT_DOUBLE_EQ(c.correlation_limit, 200.0);
  EXPECT_DOUBLE_EQ(c.energy_limit, 5000.0);
  EXPECT_TRUE(c.certified);
  EXPECT_DOUBLE_EQ(c.implied_bound, 25.0);
}

TEST(Tail, ThresholdAboveTrivialBound) {
  const FieldSpec k = FieldSpec::build(101);
  const TraceSample K = trace_ask(k, make_ask(k, P(k, {0, 0, 1})));
  const TailExperiment t = tail_experiment(K, RandomFunctionSpec::rademacher(1), 1, 2, 2000);
  EXPECT_EQ(t.conductor, 3);
  EXPECT_NEAR(t.threshold, 9 * std::sqrt(101 * std::log(101.0)), 1e-9);
  EXPECT_NEAR(t.threshold, 194.3, 0.05);
  EXPECT_EQ(t.exceedances, 0u);
  EXPECT_DOUBLE_EQ(t.bound, 8 * std::pow(101.0, -4.5));
  EXPECT_TRUE(t.within);
}

TEST(Tail, VacuousBoundClipped) {
  const FieldSpec k = FieldSpec::build(101);
  const TraceSample K = trace_ask(k, make_ask(k, P(k, {0, 0, 1})));
  const TailExperiment t = tail_experiment(K, RandomFunctionSpec::rademacher(2), 0.1, 2, 2000);
  EXPECT_NEAR(t.threshold, 19.43, 0.01);
  EXPECT_EQ(t.bound, 1.0);
  EXPECT_GE(t.frequency, 0.0);
  EXPECT_LE(t.frequency, 1.0);
  EXPECT_TRUE(t.within);
}

TEST(Tail, TrivialKernel) {
  const FieldSpec k = FieldSpec::build(101);
  const TraceSample K = trace_ask(k, make_ask(k, Poly()));
  const TailExperiment t = tail_experiment(K, RandomFunctionSpec::rademacher(3), 1, 2, 5000, 2);
  EXPECT_NEAR(t.bound, 8 / std::sqrt(101.0), 1e-12);
  EXPECT_NEAR(t.standard_error, std::sqrt(t.bound * (1 - t.bound) / 5000), 1e-15);
  EXPECT_TRUE(t.within);
  EXPECT_THROW(tail_experiment(K, RandomFunctionSpec::rademacher(3), 1, 1.5, 10),
               PreconditionError);
}

TEST(Tail, JobsDoNotChangeResult) {
  const FieldSpec k = FieldSpec::build(101);
  const TraceSample K = trace_ask(k, make_ask(k, Poly()));
  const auto r = RandomFunctionSpec::uniform_circle(4);
  EXPECT_EQ(tail_experiment(K, r, 0.3, 2, 700, 1).exceedances,
            tail_experiment(K, r, 0.3, 2, 700, 3).exceedances);
}

TEST(Concentration, Examples) {
  const FieldSpec k = FieldSpec::build(499);
  const auto rad = concentration_experiment(RandomFunctionSpec::rademacher(1), k, 0.5, {}, 200);
  EXPECT_EQ(rad.energy_frequency, 1.0);
  const auto circ =
      concentration_experiment(RandomFunctionSpec::uniform_circle(1), k, {}, 0.5, 200);
  EXPECT_EQ(circ.l1_frequency, 1.0);
  const auto half =
      concentration_experiment(RandomFunctionSpec::table({{0.5, 1}, {-0.5, 1}}, 1), k, {}, {}, 500);
  EXPECT_DOUBLE_EQ(half.nu1, 0.125);
  EXPECT_TRUE(half.checked);
  EXPECT_TRUE(half.pass);
  EXPECT_GE(half.energy_frequency, 1 - 10.0 / 500);
}

TEST(RandomNorm, F101Certifies) {
  const FieldSpec k = FieldSpec::build(101);
  RandomNormOptions opt;
  opt.trials = 200;
  opt.jobs = 2;
  const RandomNormReport r =
      random_norm_experiment(KernelFamily::standard(k, 3), RandomFunctionSpec::rademacher(7), opt);
  ASSERT_TRUE(r.smallest_alpha.has_value());
  EXPECT_LE(*r.smallest_alpha, 8.0);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.min_trivial_upper, std::sqrt(101.0));
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_GE(r.rows[i].fraction, r.rows[i - 1].fraction);
  }
}

TEST(RandomNorm, Deterministic) {
  const FieldSpec k = FieldSpec::build(31);
  const KernelFamily fam = KernelFamily::standard(k, 3);
  RandomNormOptions opt;
  opt.trials = 40;
  const auto a = to_json(random_norm_experiment(fam, RandomFunctionSpec::uniform_circle(9), opt));
  opt.jobs = 3;
  const auto b = to_json(random_norm_experiment(fam, RandomFunctionSpec::uniform_circle(9), opt));
  EXPECT_EQ(a, b);
}

TEST(RandomFunctionJson, RoundTrip) {
  const auto t = RandomFunctionSpec::table({{Complex(0.5, 0.5), 1}, {Complex(-0.5, -0.5), 1}}, 77);
  const auto back = random_function_spec_from_json(to_json(t));
  EXPECT_EQ(back.seed, 77u);
  ASSERT_EQ(back.atoms.size(), 2u);
  EXPECT_EQ(back.atoms[0].value, Complex(0.5, 0.5));
  EXPECT_THROW(random_function_spec_from_json({{"distribution", "gaussian"}}), FormatError);
}

}  // namespace
}  // namespace tracecodes
