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
#include "tracecodes/orthogonality.hpp"
#include "tracecodes/sheaf.hpp"

namespace tracecodes {
namespace {

Poly P(const FieldSpec& k, std::vector<std::int64_t> c) {
  std::vector<FieldElement> e;
  for (auto v : c) e.push_back(k.from_int(v));
  return Poly(std::move(e));
}

RationalFunction R(const FieldSpec& k, std::vector<std::int64_t> num,
                   std::vector<std::int64_t> den = {1}) {
  return RationalFunction(k, P(k, std::move(num)), P(k, std::move(den)));
}

std::uint64_t quadratic(const FieldSpec& k) { return (k.q() - 1) / 2; }

void expect_near(Complex a, Complex b, double tol = 1e-12) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

TEST(TraceAsk, QuadraticPhaseOverF5) {
  const FieldSpec k = FieldSpec::build(5);
  const TraceSample s = trace_ask(k, make_ask(k, P(k, {0, 0, 1})));
  ASSERT_EQ(s.values.size(), 5u);
  const double num[] = {0, 1, 4, 4, 1};
  Complex sum = 0;
  for (int x = 0; x < 5; ++x) {
    expect_near(s.values[x], oracle::e(num[x] / 5));
    sum += s.values[x];
  }
  EXPECT_NEAR(std::abs(sum), std::sqrt(5.0), 1e-12);
}

TEST(TraceAsk, TrivialSheaf) {
  const FieldSpec k = FieldSpec::build(3, 2);
  const TraceSample s = trace_ask(k, make_ask(k, Poly()));
  EXPECT_TRUE(s.covers_field());
  for (auto v : s.values) expect_near(v, 1.0);
}

TEST(TraceAsk, QuadraticKummerOverF5) {
  const FieldSpec k = FieldSpec::build(5);
  const TraceSample s = trace_ask(k, make_ask(k, Poly(), R(k, {0, 1}), k.one(), quadratic(k)));
  ASSERT_EQ(s.domain.size(), 4u);
  const double expect[] = {1, -1, -1, 1};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(s.domain[i].code, static_cast<std::uint64_t>(i + 1));
    expect_near(s.values[i], expect[i]);
  }
}

TEST(TraceAsk, UnimodularOnDomain) {
  const FieldSpec k = FieldSpec::build(7, 2);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> pick(0, k.q() - 1);
  for (int i = 0; i < 30; ++i) {
    std::vector<FieldElement> f1(4);
    for (auto& c : f1) c = k.element(pick(rng));
    const auto d = make_ask(k, Poly(f1), R(k, {1, 2, 1}, {3, 0, 1}), k.element(1 + i % 48),
                            1 + pick(rng) % (k.q() - 2));
    for (auto v : trace_ask(k, d).values) ASSERT_NEAR(std::abs(v), 1.0, 1e-12);
  }
}

TEST(Conductor, Examples) {
  const FieldSpec k7 = FieldSpec::build(7);
  const ConductorReport c1 = conductor_ask(k7, make_ask(k7, P(k7, {0, 0, 0, 1})));
  EXPECT_EQ(c1.conductor, 4);
  ASSERT_EQ(c1.singular_points.size(), 1u);
  EXPECT_TRUE(c1.singular_points[0].at_infinity);
  EXPECT_EQ(c1.singular_points[0].swan, 3);

  const ConductorReport c2 = conductor_ask(k7, make_ask(k7, Poly()));
  EXPECT_EQ(c2.conductor, 1);
  EXPECT_TRUE(c2.singular_points.empty());

  const FieldSpec k5 = FieldSpec::build(5);
  const ConductorReport c3 =
      conductor_ask(k5, make_ask(k5, P(k5, {0, 1}), R(k5, {0, 1}), k5.one(), quadratic(k5)));
  EXPECT_EQ(c3.conductor, 3);
  EXPECT_EQ(c3.singular_points.size(), 2u);
  EXPECT_TRUE(c3.wild_and_tame_at_infinity);
}

TEST(Conductor, OnePlusDegree) {
  const FieldSpec k = FieldSpec::build(11);
  for (int d = 1; d < 11; ++d) {
    std::vector<std::int64_t> c(d + 1, 0);
    c[d] = 3;
    c[0] = 1;
    EXPECT_EQ(conductor_ask(k, make_ask(k, P(k, c))).conductor, 1 + d);
  }
  EXPECT_THROW(conductor_ask(k, make_ask(k, P(k, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}))),
               PreconditionError);
}

TEST(Conductor, ClosedPointDegreeCounts) {
  // x^2 + 1 is irreducible over F_7: one closed point of degree 2. With the
  // quadratic character the pole of order 2 at infinity is unramified; with a
  // cubic character it is not.
  const FieldSpec k = FieldSpec::build(7);
  const auto r = conductor_ask(k, make_ask(k, Poly(), R(k, {1, 0, 1}), k.one(), 3));
  EXPECT_EQ(r.conductor, 1 + 2);
  ASSERT_EQ(r.singular_points.size(), 1u);
  EXPECT_EQ(r.singular_points[0].degree, 2);
  const auto c = conductor_ask(k, make_ask(k, Poly(), R(k, {1, 0, 1}), k.one(), 2));
  EXPECT_EQ(c.conductor, 1 + 2 + 1);
}

TEST(AskReduce, Examples) {
  const FieldSpec k = FieldSpec::build(5);
  EXPECT_EQ(ask_reduce(k, P(k, {0, 0, 1, 0, 0, 1})), P(k, {0, 1, 1}));
  EXPECT_TRUE(ask_reduce(k, P(k, {3})).is_zero());
  EXPECT_EQ(ask_reduce(k, P(k, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})), P(k, {0, 0, 1}));
}

TEST(AskReduce, IdempotentProjection) {
  for (auto [p, n] : {std::pair{5u, 1u}, {3u, 2u}, {2u, 3u}}) {
    const FieldSpec k = FieldSpec::build(p, n);
    std::mt19937_64 rng(p * n);
    std::uniform_int_distribution<std::uint64_t> pick(0, k.q() - 1);
    auto rnd = [&](int deg) {
      std::vector<FieldElement> c(deg + 1);
      for (auto& x : c) x = k.element(pick(rng));
      return Poly(c);
    };
    for (int i = 0; i < 1000; ++i) {
      const Poly f = rnd(6);
      const Poly h = rnd(2);
      const Poly shifted =
          add(k, add(k, f, sub(k, pow(k, h, p), h)), Poly::constant(k.element(pick(rng))));
      const Poly r = ask_reduce(k, f);
      ASSERT_EQ(ask_reduce(k, r), r);
      ASSERT_EQ(ask_reduce(k, shifted), r);
    }
  }
}

TEST(KummerReduce, Examples) {
  const FieldSpec k5 = FieldSpec::build(5);
  const auto a = kummer_reduce(k5, R(k5, {0, 0, 1, 1}), 2);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].poly, P(k5, {1, 1}));
  EXPECT_EQ(a[0].multiplicity, 1);
  EXPECT_TRUE(kummer_reduce(k5, R(k5, {3}), 2).empty());

  const FieldSpec k7 = FieldSpec::build(7);
  const auto b = kummer_reduce(k7, R(k7, {0, 1}, {1, 3, 3, 1}), 3);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].poly, P(k7, {0, 1}));
  EXPECT_EQ(b[0].multiplicity, 1);
}

TEST(GeomIsomorphic, Examples) {
  const FieldSpec k = FieldSpec::build(5);
  EXPECT_TRUE(ask_geom_isomorphic(k, make_ask(k, P(k, {0, 0, 1})), make_ask(k, P(k, {3, 0, 1}))));
  EXPECT_FALSE(ask_geom_isomorphic(k, make_ask(k, P(k, {0, 0, 1})), make_ask(k, P(k, {0, 1}))));
  const auto a = make_ask(k, Poly(), R(k, {0, 0, 1}), k.one(), quadratic(k));
  const auto b = make_ask(k, Poly(), R(k, {0, 0, 0, 0, 0, 0, 0, 1}), k.one(), quadratic(k));
  EXPECT_FALSE(ask_geom_isomorphic(k, a, b));
}

TEST(DescriptorId, EqualOnIsomorphismClasses) {
  const FieldSpec k = FieldSpec::build(5);
  const auto a = SheafDescriptor{make_ask(k, P(k, {0, 1, 1}))};
  const auto b = SheafDescriptor{make_ask(k, P(k, {2, 0, 1, 0, 0, 1}))};
  EXPECT_EQ(descriptor_id(k, a), descriptor_id(k, b));
  const auto c = SheafDescriptor{make_ask(k, P(k, {0, 2, 1}))};
  EXPECT_NE(descriptor_id(k, a), descriptor_id(k, c));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_ask_classes(FieldSpec::build(3), 3).size(), 9u);
  EXPECT_EQ(enumerate_ask_classes(FieldSpec::build(5), 2).size(), 5u);
  EXPECT_EQ(enumerate_ask_classes(FieldSpec::build(7), 1).size(), 1u);
  EXPECT_EQ(count_ask_classes(FieldSpec::build(3), 3), 9);
}

TEST(Enumerate, ClassesPairwiseNonIsomorphic) {
  const FieldSpec k = FieldSpec::build(5);
  for (std::uint64_t chi : {std::uint64_t{0}, quadratic(k)}) {
    const auto all = enumerate_ask_classes(k, 4, chi);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        ASSERT_FALSE(ask_geom_isomorphic(k, all[i], all[j]));
      }
    }
  }
}

TEST(Enumerate, FamilyIndexMatchesList) {
  const FieldSpec k = FieldSpec::build(7);
  const AskClassFamily fam(k, 4, 2);
  const auto list = enumerate_ask_classes(k, 4, 2);
  ASSERT_EQ(fam.size(), list.size());
  for (std::uint64_t i = 0; i < fam.size(); ++i) {
    EXPECT_TRUE(ask_geom_isomorphic(k, fam.at(i), list[i]));
    EXPECT_LE(conductor_ask(k, fam.at(i)).conductor, 4);
    EXPECT_EQ(conductor_ask(k, fam.at(i)).conductor, fam.conductor_at(i));
  }
}

TEST(Supermorse, CheckExamples) {
  const FieldSpec k7 = FieldSpec::build(7);
  const auto ok = check_supermorse(k7, P(k7, {0, -3, 0, 1}));
  ASSERT_TRUE(ok.ok) << ok.reason;
  EXPECT_EQ(ok.z_count, 2);
  EXPECT_EQ(ok.z_rational, (std::vector<FieldElement>{k7.element(1), k7.element(6)}));
  EXPECT_EQ(ok.s_rational, (std::vector<FieldElement>{k7.element(5), k7.element(2)}));
  EXPECT_FALSE(check_supermorse(k7, P(k7, {0, 0, 0, 1})).ok);
  const FieldSpec k5 = FieldSpec::build(5);
  EXPECT_FALSE(check_supermorse(k5, P(k5, {0, 0, 0, 0, 0, 1})).ok);
}

TEST(Supermorse, FiberCountsSumToZero) {
  const FieldSpec k = FieldSpec::build(7);
  const TraceSample s = trace_supermorse(k, P(k, {0, -3, 0, 1}));
  const auto fiber = [](std::int64_t x) {
    int n = 0;
    for (std::int64_t y = 0; y < 7; ++y) n += oracle::eval({0, -3, 0, 1}, y, 7) == x ? 1 : 0;
    return n - 1;
  };
  // The sample omits the critical values 5 and 2; the full sum includes them.
  ASSERT_EQ(s.domain.size(), 5u);
  int total = fiber(5) + fiber(2);
  for (std::size_t i = 0; i < s.domain.size(); ++i) {
    const auto x = static_cast<std::int64_t>(s.domain[i].code);
    EXPECT_NE(x, 5);
    EXPECT_NE(x, 2);
    EXPECT_EQ(s.values[i], Complex(fiber(x)));
    total += fiber(x);
  }
  EXPECT_EQ(total, 0);
}

TEST(Supermorse, QuadraticIsLegendre) {
  const FieldSpec k = FieldSpec::build(7);
  const TraceSample s = trace_supermorse(k, P(k, {0, 0, 1}));
  ASSERT_EQ(s.domain.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto x = static_cast<std::int64_t>(s.domain[i].code);
    EXPECT_EQ(s.values[i], Complex(oracle::legendre(x, 7)));
  }
  EXPECT_EQ(s.rank, 1);
}

TEST(Supermorse, Conductor) {
  const FieldSpec k = FieldSpec::build(7);
  EXPECT_EQ(conductor_supermorse(k, P(k, {0, -3, 0, 1})).conductor, 4);
  EXPECT_EQ(conductor_supermorse(k, P(k, {0, 0, 1})).conductor, 2);
  EXPECT_THROW(conductor_supermorse(k, P(k, {0, 1})), PreconditionError);
}

TEST(Supermorse, OrbitRepresentatives) {
  const FieldSpec k = FieldSpec::build(7);
  for (int degree : {2, 3}) {
    const auto reps = supermorse_orbit_representatives(k, degree);
    ASSERT_FALSE(reps.empty());
    for (const Poly& f : reps) {
      EXPECT_EQ(f.degree(), degree);
      EXPECT_TRUE(check_supermorse(k, f).ok);
    }
  }
}

TEST(Fourier, TrivialSheafIsDelta) {
  const FieldSpec k = FieldSpec::build(11);
  const TraceSample s = fourier_transform(trace_ask(k, make_ask(k, Poly())), k.one());
  expect_near(s.values[0], -std::sqrt(11.0), 1e-9);
  for (int t = 1; t < 11; ++t) expect_near(s.values[t], 0.0, 1e-9);
  EXPECT_TRUE(s.numeric_only);
}

TEST(Fourier, PlancherelAndReflection) {
  const FieldSpec k = FieldSpec::build(101);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> pick(0, 100);
  for (int i = 0; i < 10; ++i) {
    const auto d = make_ask(k, P(k, {0, pick(rng), pick(rng), 1 + pick(rng) % 100}),
                            R(k, {-pick(rng), 1}), k.one(), 1 + pick(rng) % 99);
    const TraceSample s = trace_ask(k, d);
    const TraceSample f = fourier_transform(s, k.one());
    const TraceSample ff = fourier_transform(f, k.one());
    double e0 = 0;
    double e1 = 0;
    for (auto v : s.values) e0 += std::norm(v);
    for (auto v : f.values) e1 += std::norm(v);
    EXPECT_NEAR(e0 / 101, e1 / 101, 1e-9);
    // Extend s by zero, then compare ff(u) with s(-u).
    std::vector<Complex> full(101);
    for (std::size_t j = 0; j < s.domain.size(); ++j) full[s.domain[j].code] = s.values[j];
    for (std::uint64_t u = 0; u < 101; ++u) {
      ASSERT_LT(std::abs(ff.values[u] - full[(101 - u) % 101]), 1e-9);
    }
  }
}

TEST(Fourier, RejectsLinearAdditivePart) {
  const FieldSpec k = FieldSpec::build(11);
  EXPECT_THROW(fourier_transform(trace_ask(k, make_ask(k, P(k, {0, 3}))), k.one()),
               PreconditionError);
}

TEST(Fourier, MatchesDirectSum) {
  const FieldSpec k = FieldSpec::build(3, 2);
  const TraceSample s = trace_ask(k, make_ask(k, P(k, {0, 0, 1}), R(k, {1, 1}), k.one(), 4));
  const TraceSample f = fourier_transform(s, k.one());
  const AdditiveCharacter psi(k, k.one());
  for (std::uint64_t t = 0; t < k.q(); ++t) {
    Complex acc = 0;
    for (std::size_t j = 0; j < s.domain.size(); ++j) {
      acc += s.values[j] * psi(k.mul(k.element(t), s.domain[j]));
    }
    expect_near(f.values[t], -acc / 3.0, 1e-12);
  }
}

TEST(MakeSample, DispatchesOnKind) {
  const FieldSpec k = FieldSpec::build(7);
  const SheafDescriptor d{SupermorseDescriptor{P(k, {0, 0, 1})}};
  EXPECT_EQ(kind_name(d), "supermorse");
  EXPECT_EQ(make_sample(k, d).values, trace_supermorse(k, P(k, {0, 0, 1})).values);
}

}  // namespace
}  // namespace tracecodes
