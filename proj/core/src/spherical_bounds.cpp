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

#include "tracecodes/spherical_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

constexpr int kRescaleEvery = 16;

struct HermiteEval {
  int sign_changes = 0;
  int last_sign = 0;  // sign of H_k, 0 when it vanishes
};

// Runs H_0 .. H_k at x, rescaling the pair every few steps. Rescaling by a
// positive factor leaves every sign intact.
HermiteEval hermite_signs(int k, long double x) {
  HermiteEval out;
  long double prev = 1.0L;
  long double cur = 2.0L * x;
  int sign = 1;
  const auto account = [&](long double v) {
    const int s = (v > 0) - (v < 0);
    if (s != 0) {
      if (s != sign) ++out.sign_changes;
      sign = s;
    }
    return s;
  };
  out.last_sign = k == 0 ? 1 : account(cur);
  for (int j = 1; j < k; ++j) {
    const long double next = 2.0L * x * cur - 2.0L * j * prev;
    prev = cur;
    cur = next;
    out.last_sign = account(cur);
    if (j % kRescaleEvery == 0) {
      const long double scale = std::max(std::fabs(prev), std::fabs(cur));
      if (scale > 0) {
        prev /= scale;
        cur /= scale;
      }
    }
  }
  return out;
}

Decimal to_decimal(double v) { return Decimal(v); }

std::string decimal_string(const Decimal& d) { return d.str(30, std::ios_base::fixed); }

}  // namespace

int hermite_zeros_above(int k, long double x) {
  require(k >= 0, "hermite: degree must be nonnegative");
  return hermite_signs(k, x).sign_changes;
}

HermiteRoot hermite_largest_root(int k) {
  require(k >= 1, "hermite_largest_root: degree must be at least 1");
  HermiteRoot r;
  r.k = k;
  if (k == 1) {
    r.sign_change = true;
    return r;
  }
  const long double lower = std::sqrt(static_cast<long double>(k - 1) / 2.0L);
  long double lo = lower;
  long double hi = std::sqrt(2.0L * k);
  for (int it = 0; it < 400 && hi - lo > 1e-16L * hi; ++it) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (hermite_zeros_above(k, mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  r.lo = lo;
  r.hi = hi;
  r.value = lo + (hi - lo) / 2;
  const int s_lo = hermite_signs(k, lo).last_sign;
  const int s_hi = hermite_signs(k, hi).last_sign;
  // At k = 2 the root coincides with the analytic lower endpoint, where H_2
  // is zero up to rounding.
  r.sign_change = s_lo * s_hi <= 0 ||
                  (lo == lower && std::fabs(4.0L * lo * lo - 2.0L) < 1e-15L);
  return r;
}

long double jacobi_root_lower_bound(int n, int k) {
  require(n >= 2 && k >= 2, "jacobi_root_lower_bound: requires n >= 2 and k >= 2");
  const long double num = 2.0L * (n + k - 2);
  const long double den = static_cast<long double>(n + 2 * k - 2) * (n + 2 * k - 4);
  require(den > 0, "jacobi_root_lower_bound: nonpositive denominator");
  return std::sqrt(num / den) * hermite_largest_root(k).value;
}

namespace {

BoundValue binomial_bound(std::uint64_t n, std::uint64_t k) {
  BoundValue b;
  b.formula = "binomial";
  // 2 C(n - 1 + k, k)
  if (n - 1 + k <= kExactBinomialLimit) {
    BigInt exact = 2 * binomial(n - 1 + k, k);
    b.log10 = log10_of(exact);
    b.exact = std::move(exact);
  } else {
    b.log10 = log10(Decimal(2)) +
              log10_binomial(Decimal(n - 1 + k), Decimal(k));
  }
  return b;
}

}  // namespace

BoundValue kl_cardinality_bound(int n, double cosphi, int k_cap) {
  require(n >= 2, "kl_cardinality_bound: n must be at least 2");
  require(cosphi >= 0 && cosphi < 1, "kl_cardinality_bound: need 0 <= cosphi < 1");
  for (int k = 2; k <= k_cap; ++k) {
    const long double t = jacobi_root_lower_bound(n, k);
    if (static_cast<long double>(cosphi) <= t) {
      BoundValue b = binomial_bound(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
      b.params = {{"n", n}, {"cosphi", cosphi}, {"k", k},
                  {"root_lower_bound", static_cast<double>(t)}};
      return b;
    }
  }
  throw PreconditionError("kl_cardinality_bound: no admissible k up to the cap; the angle is "
                          "too small for this dimension");
}

KLParams kl_params(double n, double gamma) {
  KLParams p;
  p.n = n;
  p.gamma = gamma;
  const double kk = std::ceil((gamma + 1) * (gamma + 1));
  p.k = 1 + static_cast<int>(kk);
  p.admissible = n >= 2 * gamma * kk;
  return p;
}

KLBound kl_polynomial_bound(std::uint64_t n, double gamma) {
  require(gamma > 0, "kl_polynomial_bound: gamma must be positive");
  KLBound out;
  out.params = kl_params(static_cast<double>(n), gamma);
  require(out.params.admissible,
          "kl_polynomial_bound: requires n >= 2 gamma ceil((gamma + 1)^2)");
  out.binomial = binomial_bound(n, static_cast<std::uint64_t>(out.params.k));
  const Decimal g = to_decimal(gamma);
  const Decimal exponent = g * g + 2 * g + 3;
  out.gamma_form.formula = "gamma-form";
  out.gamma_form.log10 = exponent * log10(Decimal(n - 1)) - log10_gamma(g * g + 2 * g + 2);
  out.gamma_form_dominates = out.binomial.log10 <= out.gamma_form.log10;
  const nlohmann::json params = {{"n", n}, {"gamma", gamma}, {"k", out.params.k},
                                 {"admissible", out.params.admissible}};
  out.binomial.params = params;
  out.gamma_form.params = params;
  out.binomial.params["gamma_form_log10"] = decimal_string(out.gamma_form.log10);
  out.binomial.params["gamma_form_dominates"] = out.gamma_form_dominates;
  return out;
}

CountBound lisse_count_bound(std::uint64_t q, std::uint64_t u_size, int c, int r,
                             double constant, bool raw) {
  require(c >= 1 && r >= 1 && u_size >= 1, "lisse_count_bound: c, r, |U| must be positive");
  const double threshold = constant * std::pow(c, 3) * std::pow(r, 6);
  const bool regime = static_cast<double>(q) >= threshold && r <= c;
  if (!raw) {
    require(r <= c, "lisse_count_bound: requires r <= c");
    require(static_cast<double>(q) >= threshold,
            "lisse_count_bound: requires q >= constant c^3 r^6");
  }
  CountBound out;
  out.theorem_regime = regime;
  const Decimal cd = c;
  const Decimal rd = r;
  const Decimal main = 90 * cd * cd * rd * rd * rd * rd;
  const Decimal exponent = main + 6 * sqrt(Decimal(10)) * cd * rd * rd + 3;
  out.value.formula = "gamma-form";
  out.value.log10 = exponent * log10(Decimal(2 * u_size)) - log10_gamma(main);
  const double gamma = 3.0 * std::sqrt(10.0) * c * r * r;
  out.params = kl_params(2.0 * static_cast<double>(u_size), gamma);
  out.value.params = {{"q", q},
                      {"U_size", u_size},
                      {"c", c},
                      {"r", r},
                      {"constant", constant},
                      {"raw", raw},
                      {"theorem_regime", regime},
                      {"kl", to_json(out.params)}};
  return out;
}

Decimal open_set_count(std::uint64_t q, std::uint64_t g, int c) {
  require(c >= 1, "open_set_count: c must be positive");
  const Decimal base = pow(Decimal(q), Decimal(c) / 2) + Decimal(g);
  return Decimal(c) * base * base;
}

CountBound mext_count_bound(std::uint64_t q, std::uint64_t g, int c, bool raw) {
  require(c >= 1, "mext_count_bound: c must be positive");
  const double threshold = kLisseConstantProof * std::pow(static_cast<double>(c), 9);
  const bool regime = static_cast<double>(q) >= threshold;
  if (!raw) require(regime, "mext_count_bound: requires q >= 1265 c^9");
  const std::uint64_t u_cap = 4 * q;
  CountBound lisse = lisse_count_bound(q, u_cap, c, c, kLisseConstantProof, raw);
  CountBound out;
  out.params = lisse.params;
  out.theorem_regime = regime;
  const Decimal open_sets = log10(open_set_count(q, g, c));
  out.value.formula = "composed";
  out.value.log10 = open_sets + lisse.value.log10;
  out.value.params = {{"q", q},
                      {"g", g},
                      {"c", c},
                      {"raw", raw},
                      {"theorem_regime", regime},
                      {"open_sets_log10", decimal_string(open_sets)},
                      {"lisse_log10", decimal_string(lisse.value.log10)},
                      {"U_cap", u_cap}};
  if (!regime) out.value.params["label"] = "non-theorem";
  return out;
}

bool consistency_check(const BigInt& lower_count, const BoundValue& bound) {
  if (lower_count <= 0) return true;
  return consistency_check_log10(log10_of(lower_count), bound);
}

bool consistency_check_log10(const Decimal& lower_log10, const BoundValue& bound) {
  return lower_log10 <= bound.log10;
}

nlohmann::json to_json(const BoundValue& b) {
  nlohmann::json j;
  j["exact"] = b.exact ? nlohmann::json(b.exact->str()) : nlohmann::json(nullptr);
  j["log10"] = decimal_string(b.log10);
  j["formula"] = b.formula;
  j["params"] = b.params;
  return j;
}

nlohmann::json to_json(const KLParams& p) {
  return {{"n", p.n}, {"gamma", p.gamma}, {"k", p.k}, {"admissible", p.admissible}};
}

nlohmann::json to_json(const HermiteRoot& h) {
  return {{"k", h.k},
          {"value", static_cast<double>(h.value)},
          {"lo", static_cast<double>(h.lo)},
          {"hi", static_cast<double>(h.hi)},
          {"sign_change", h.sign_change}};
}

}  // namespace tracecodes
