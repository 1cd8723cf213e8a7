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

#ifndef TRACECODES_SPHERICAL_BOUNDS_HPP_
#define TRACECODES_SPHERICAL_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "tracecodes/lgamma.hpp"

namespace tracecodes {

struct HermiteRoot {
  int k = 1;
  long double value = 0;
  long double lo = 0;
  long double hi = 0;
  // H_k(lo) and H_k(hi) have opposite signs (or H_k(lo) vanishes).
  bool sign_change = false;
};

// Largest zero of the physicists' Hermite polynomial H_k by bisection on
// [sqrt((k-1)/2), sqrt(2k)], counting sign changes of H_0..H_k.
HermiteRoot hermite_largest_root(int k);

// Number of zeros of H_k greater than x.
int hermite_zeros_above(int k, long double x);

// Lower bound for the largest zero of the degree-k Gegenbauer polynomial
// used at dimension n. Requires n >= 2 and k >= 2.
long double jacobi_root_lower_bound(int n, int k);

struct KLParams {
  double n = 0;
  double gamma = 0;
  int k = 0;
  bool admissible = false;
};

struct BoundValue {
  std::optional<BigInt> exact;
  Decimal log10 = 0;
  std::string formula;  // "binomial" | "gamma-form" | "composed"
  nlohmann::json params = nlohmann::json::object();
};

// Binomial forms are exact only when n - 1 + k stays at or below this.
inline constexpr std::uint64_t kExactBinomialLimit = 1000000;

// Smallest k >= 2 with cosphi <= jacobi_root_lower_bound(n, k), bound
// 2 C(n - 1 + k, k). Throws PreconditionError unless 0 <= cosphi < 1, or
// when no k up to k_cap works.
BoundValue kl_cardinality_bound(int n, double cosphi, int k_cap = 1000);

struct KLBound {
  KLParams params;
  BoundValue binomial;     // 2 C(n - 1 + k, k), k = 1 + ceil((gamma + 1)^2)
  BoundValue gamma_form;   // (n - 1)^{g^2 + 2g + 3} / Gamma(g^2 + 2g + 2)
  bool gamma_form_dominates = false;
};

// Throws PreconditionError when gamma <= 0 or n < 2 gamma ceil((gamma + 1)^2).
KLBound kl_polynomial_bound(std::uint64_t n, double gamma);
KLParams kl_params(double n, double gamma);

inline constexpr double kLisseConstant = 1500;
inline constexpr double kLisseConstantProof = 1265;

struct CountBound {
  BoundValue value;
  KLParams params;
  bool theorem_regime = true;  // preconditions held
};

// (2U)^{90c^2r^4 + 6 sqrt(10) c r^2 + 3} / Gamma(90 c^2 r^4). Requires
// q >= constant c^3 r^6 and 1 <= r <= c unless raw is set.
CountBound lisse_count_bound(std::uint64_t q, std::uint64_t u_size, int c, int r,
                             double constant = kLisseConstant, bool raw = false);

// c (q^{c/2} + g)^2
Decimal open_set_count(std::uint64_t q, std::uint64_t g, int c);

// log10 c (q^{c/2} + g)^2 plus the lisse bound at |U| = ceil(4q), r = c and
// the constant 1265. Requires q >= 1265 c^9 unless raw is set.
CountBound mext_count_bound(std::uint64_t q, std::uint64_t g, int c, bool raw = false);

bool consistency_check(const BigInt& lower_count, const BoundValue& bound);
bool consistency_check_log10(const Decimal& lower_log10, const BoundValue& bound);

nlohmann::json to_json(const BoundValue& b);
nlohmann::json to_json(const KLParams& p);
nlohmann::json to_json(const HermiteRoot& h);

}  // namespace tracecodes

#endif  // TRACECODES_SPHERICAL_BOUNDS_HPP_
