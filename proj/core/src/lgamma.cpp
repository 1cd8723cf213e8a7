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

#include "tracecodes/lgamma.hpp"

#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr int kTerms = 30;
constexpr int kShift = 40;

// B_0 .. B_m by the Akiyama-Tanigawa transform.
std::vector<Rational> bernoulli(int m) {
  std::vector<Rational> a(static_cast<std::size_t>(m) + 1);
  std::vector<Rational> out;
  for (int i = 0; i <= m; ++i) {
    a[static_cast<std::size_t>(i)] = Rational(1, i + 1);
    for (int j = i; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] =
          Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(a[0]);
  }
  // The transform yields B_1 = +1/2; only even indices are used here.
  return out;
}

Decimal to_decimal(const Rational& r) {
  return Decimal(numerator(r)) / Decimal(denominator(r));
}

struct Coefficients {
  // B_{2j} / (2j (2j - 1)) for j = 1..kTerms, and the bound factor for the
  // first omitted term.
  std::vector<Decimal> series;
  Decimal next;
};

const Coefficients& coefficients() {
  static const Coefficients c = [] {
    Coefficients out;
    const auto b = bernoulli(2 * kTerms + 2);
    for (int j = 1; j <= kTerms; ++j) {
      out.series.push_back(to_decimal(b[static_cast<std::size_t>(2 * j)] /
                                      Rational((2 * j) * (2 * j - 1))));
    }
    const int m = kTerms + 1;
    out.next = abs(to_decimal(b[static_cast<std::size_t>(2 * m)] / Rational((2 * m) * (2 * m - 1))));
    return out;
  }();
  return c;
}

}  // namespace

LogGamma log_gamma(const Decimal& x) {
  require(x > 0, "log_gamma: argument must be positive");
  Decimal shift_log = 0;
  Decimal y = x;
  while (y < kShift) {
    shift_log += log(y);
    y += 1;
  }
  const auto& c = coefficients();
  const Decimal half_log_2pi = log(2 * boost::math::constants::pi<Decimal>()) / 2;
  Decimal value = (y - Decimal(0.5)) * log(y) - y + half_log_2pi;
  const Decimal inv = 1 / y;
  const Decimal inv2 = inv * inv;
  Decimal power = inv;  // y^{-(2j-1)}
  for (const auto& coef : c.series) {
    value += coef * power;
    power *= inv2;
  }
  // The series alternates with decreasing terms for real y > 0, so the
  // error is bounded by the first omitted term.
  return LogGamma{value - shift_log, c.next * power};
}

Decimal log10_gamma(const Decimal& x) {
  static const Decimal ln10 = log(Decimal(10));
  return log_gamma(x).value / ln10;
}

Decimal log10_of(const BigInt& n) {
  require(n > 0, "log10_of: argument must be positive");
  // Split off powers of ten so that the conversion keeps full precision.
  const std::size_t digits = n.str().size();
  if (digits <= 40) return log10(Decimal(n));
  const std::size_t drop = digits - 40;
  const BigInt head = n / boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(drop));
  // The dropped tail changes the value by less than one part in 10^39.
  return log10(Decimal(head)) + Decimal(drop);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Decimal log10_binomial(const Decimal& n, const Decimal& k) {
  require(k >= 0 && n >= k, "log10_binomial: need 0 <= k <= n");
  return log10_gamma(n + 1) - log10_gamma(k + 1) - log10_gamma(n - k + 1);
}

}  // namespace tracecodes
