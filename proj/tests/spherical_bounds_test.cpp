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

#include "oracles.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/spherical_bounds.hpp"

namespace tracecodes {
namespace {

double to_d(const Decimal& d) { return d.convert_to<double>(); }

// Largest zero of H_k: scan down from sqrt(2k) + 1 for the first sign change,
// then bisect.
long double oracle_largest_root(int k) {
  long double hi = std::sqrt(2.0L * k) + 1;
  const long double step = 1e-3L;
  const int s = oracle::hermite(k, hi) > 0 ? 1 : -1;
  long double lo = hi - step;
  while ((oracle::hermite(k, lo) > 0 ? 1 : -1) == s) {
    hi = lo;
    lo -= step;
  }
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    if ((oracle::hermite(k, mid) > 0 ? 1 : -1) == s) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

TEST(Hermite, ClosedForms) {
  EXPECT_EQ(hermite_largest_root(1).value, 0.0L);
  EXPECT_NEAR(static_cast<double>(hermite_largest_root(2).value), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(hermite_largest_root(3).value), std::sqrt(1.5), 1e-12);
}

TEST(Hermite, MatchesBisectionOracle) {
  for (int k : {4, 5, 7, 10, 25, 60, 120}) {
    EXPECT_NEAR(static_cast<double>(hermite_largest_root(k).value),
                static_cast<double>(oracle_largest_root(k)), 1e-10)
        << "k=" << k;
  }
}

TEST(Hermite, BracketsUpTo200) {
  for (int k = 2; k <= 200; ++k) {
    const HermiteRoot h = hermite_largest_root(k);
    EXPECT_TRUE(h.sign_change) << k;
    EXPECT_GE(h.value, std::sqrt((k - 1) / 2.0L) - 1e-15L) << k;
    EXPECT_LE(h.value, std::sqrt(2.0L * k)) << k;
    if (k > 2) {
      EXPECT_GT(h.value, std::sqrt((k - 1) / 2.0L)) << k;
    }
    EXPECT_EQ(hermite_zeros_above(k, h.value + 1e-9L), 0) << k;
    EXPECT_EQ(hermite_zeros_above(k, h.value - 1e-9L), 1) << k;
  }
}

TEST(Hermite, EdgeDeficit) {
  const double h = static_cast<double>(hermite_largest_root(200).value);
  const double scaled = (std::sqrt(400.0) - h) * std::pow(400.0, 1.0 / 6);
  EXPECT_NEAR(scaled, 3.3721 / std::cbrt(6.0), 0.05 * 1.8557);
}

TEST(JacobiLowerBound, Examples) {
  const long double h5 = hermite_largest_root(5).value;
  EXPECT_NEAR(static_cast<double>(jacobi_root_lower_bound(8, 5)),
              static_cast<double>(std::sqrt(2.0L * 11 / (16 * 14)) * h5), 1e-15);
  for (int n : {2, 3, 10, 1000}) {
    EXPECT_NEAR(static_cast<double>(jacobi_root_lower_bound(n, 2)),
                std::sqrt(2.0 * n / (n + 2) / n) / std::sqrt(2.0), 1e-15);
  }
  EXPECT_LT(jacobi_root_lower_bound(100000, 4), jacobi_root_lower_bound(1000, 4));
  EXPECT_NEAR(static_cast<double>(jacobi_root_lower_bound(10000000, 4)),
              std::sqrt(2.0 / 10000000) * static_cast<double>(hermite_largest_root(4).value),
              1e-9);
  EXPECT_THROW(jacobi_root_lower_bound(1, 3), PreconditionError);
}

TEST(KlCardinality, Examples) {
  const BoundValue b = kl_cardinality_bound(8, 0.0);
  ASSERT_TRUE(b.exact.has_value());
  EXPECT_EQ(*b.exact, 72);
  EXPECT_EQ(b.params["k"], 2);
  EXPECT_THROW(kl_cardinality_bound(8, 1.0), PreconditionError);
  const BoundValue searched = kl_cardinality_bound(200, 1 / std::sqrt(200.0));
  EXPECT_LE(to_d(searched.log10), to_d(kl_polynomial_bound(200, 1).binomial.log10));
}

TEST(KlCardinality, NonincreasingAsAngleGrows) {
  double prev = 1e300;
  for (double c = 0.9; c >= 0.0; c -= 0.05) {
    const double v = to_d(kl_cardinality_bound(30, c).log10);
    EXPECT_LE(v, prev + 1e-12) << c;
    prev = v;
  }
}

TEST(KlPolynomial, Examples) {
  const KLBound b = kl_polynomial_bound(8, 1);
  EXPECT_EQ(b.params.k, 5);
  ASSERT_TRUE(b.binomial.exact.has_value());
  EXPECT_EQ(*b.binomial.exact, 1584);
  EXPECT_EQ(2 * oracle::binomial(12, 5), 1584u);
  EXPECT_NEAR(to_d(b.gamma_form.log10), 6 * std::log10(7.0) - std::log10(24.0), 1e-12);
  EXPECT_NEAR(to_d(b.gamma_form.log10), 3.691, 1e-3);
  EXPECT_TRUE(b.gamma_form_dominates);
  EXPECT_THROW(kl_polynomial_bound(7, 1), PreconditionError);
  EXPECT_THROW(kl_polynomial_bound(8, 0), PreconditionError);
}

TEST(KlPolynomial, MonotoneInN) {
  for (double g : {0.5, 1.0, 2.0, 3.5}) {
    double prev = -1;
    for (std::uint64_t n = 2; n <= 4096; n *= 2) {
      if (!kl_params(static_cast<double>(n), g).admissible) continue;
      const double v = to_d(kl_polynomial_bound(n, g).binomial.log10);
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(KlPolynomial, GammaFormDominatesForIntegerGamma) {
  for (double g : {1.0, 2.0, 3.0, 4.0}) {
    for (std::uint64_t n = 2; n <= 4096; ++n) {
      if (!kl_params(static_cast<double>(n), g).admissible) continue;
      EXPECT_TRUE(kl_polynomial_bound(n, g).gamma_form_dominates) << "n=" << n << " gamma=" << g;
    }
  }
}

TEST(KlPolynomial, DominanceFlagMatchesOracle) {
  // Fractional gamma rounds k up, and at small n the binomial form then
  // exceeds the gamma form; the flag must report that rather than assume it.
  int counterexamples = 0;
  for (double g : {0.1, 0.25, 0.5, 1.5, 2.5}) {
    for (std::uint64_t n = 2; n <= 300; ++n) {
      if (!kl_params(static_cast<double>(n), g).admissible) continue;
      const KLBound b = kl_polynomial_bound(n, g);
      const auto k = static_cast<std::uint64_t>(1 + std::ceil((g + 1) * (g + 1)));
      const long double binom = std::log10(2.0L) + oracle::log10_binomial(n - 1 + k, k);
      const long double gf = (g * g + 2 * g + 3) * std::log10(static_cast<long double>(n - 1)) -
                             oracle::log10_gamma(g * g + 2 * g + 2);
      if (std::fabs(binom - gf) < 1e-9L) continue;
      EXPECT_EQ(b.gamma_form_dominates, binom <= gf) << "n=" << n << " gamma=" << g;
      counterexamples += binom > gf ? 1 : 0;
    }
  }
  EXPECT_GT(counterexamples, 0);
}

TEST(KlPolynomial, FractionalGammaCounterexample) {
  // n = 4, gamma = 1/2: k = 4, 2 C(7, 4) = 70 against 3^4.25 / Gamma(3.25).
  const KLBound b = kl_polynomial_bound(4, 0.5);
  EXPECT_EQ(b.params.k, 4);
  EXPECT_EQ(*b.binomial.exact, BigInt(70));
  EXPECT_NEAR(std::pow(10.0, to_d(b.gamma_form.log10)), std::pow(3.0, 4.25) / std::tgamma(3.25), 1e-9);
  EXPECT_FALSE(b.gamma_form_dominates);
}

TEST(KlPolynomial, ExactAndLogAgree) {
  for (std::uint64_t n : {8u, 100u, 5000u}) {
    const KLBound b = kl_polynomial_bound(n, 1);
    ASSERT_TRUE(b.binomial.exact.has_value());
    EXPECT_NEAR(to_d(log10_of(*b.binomial.exact)), to_d(b.binomial.log10), 1e-9);
    EXPECT_NEAR(to_d(b.binomial.log10),
                static_cast<double>(std::log10(2.0L) + oracle::log10_binomial(n - 1 + 5, 5)),
                1e-9);
  }
}

TEST(KlPolynomial, LogOnlyAboveExactLimit) {
  const KLBound b = kl_polynomial_bound(2000000, 1);
  EXPECT_FALSE(b.binomial.exact.has_value());
  EXPECT_NEAR(to_d(b.binomial.log10),
              static_cast<double>(std::log10(2.0L) + oracle::log10_binomial(2000004, 5)), 1e-6);
}

TEST(LisseCount, HeadlineValue) {
  const CountBound b = lisse_count_bound(1601, 1601, 1, 1);
  const long double e = 90 + 6 * std::sqrt(10.0L) + 3;
  const long double ref = e * std::log10(3202.0L) - oracle::log10_gamma(90);
  EXPECT_NEAR(to_d(b.value.log10), 256.3, 0.5);
  EXPECT_NEAR(to_d(b.value.log10), static_cast<double>(ref), 1e-9);
  EXPECT_TRUE(b.theorem_regime);
}

TEST(LisseCount, Preconditions) {
  EXPECT_THROW(lisse_count_bound(1499, 1499, 1, 1), PreconditionError);
  EXPECT_NO_THROW(lisse_count_bound(1265, 1265, 1, 1, kLisseConstantProof));
  const CountBound raw = lisse_count_bound(101, 101, 3, 1, kLisseConstant, true);
  EXPECT_FALSE(raw.theorem_regime);
  EXPECT_THROW(lisse_count_bound(1000000, 1000000, 1, 2), PreconditionError);
}

TEST(LisseCount, SlopeInQ) {
  const double a = to_d(lisse_count_bound(100000, 100000, 1, 1).value.log10);
  const double b = to_d(lisse_count_bound(1000000, 1000000, 1, 1).value.log10);
  EXPECT_NEAR(b - a, 90 + 6 * std::sqrt(10.0) + 3, 1e-9);
}

TEST(MextCount, Composition) {
  EXPECT_NEAR(to_d(open_set_count(9, 1, 2)), 200.0, 1e-12);
  const CountBound m = mext_count_bound(1265, 0, 1);
  const CountBound l = lisse_count_bound(1265, 5060, 1, 1, kLisseConstantProof);
  EXPECT_NEAR(to_d(m.value.log10), std::log10(1265.0) + to_d(l.value.log10), 1e-9);
  EXPECT_THROW(mext_count_bound(1264, 0, 1), PreconditionError);
}

TEST(Consistency, Checks) {
  const CountBound b = lisse_count_bound(1601, 1601, 1, 1);
  EXPECT_TRUE(consistency_check(BigInt(1), b.value));
  BigInt huge = 1;
  for (int i = 0; i < 400; ++i) huge *= 10;
  EXPECT_FALSE(consistency_check(huge, b.value));
  EXPECT_FALSE(consistency_check_log10(Decimal(400), b.value));
}

TEST(Consistency, LowerCountBelowBound) {
  for (std::uint64_t q : {1601u, 12007u, 40507u}) {
    for (int c = 1; c <= 3; ++c) {
      if (1500.0 * c * c * c > q) continue;
      const double lower = (c / 2.0 - 1) * std::log10(static_cast<double>(q));
      EXPECT_TRUE(consistency_check_log10(Decimal(lower), lisse_count_bound(q, q, c, 1).value));
    }
  }
}

TEST(BoundJson, Shape) {
  const auto j = to_json(kl_polynomial_bound(8, 1).binomial);
  EXPECT_EQ(j["exact"], "1584");
  EXPECT_TRUE(j["log10"].is_string());
  EXPECT_TRUE(j["params"].is_object());
}

}  // namespace
}  // namespace tracecodes
