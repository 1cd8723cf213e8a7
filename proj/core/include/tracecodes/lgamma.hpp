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

// Log-gamma and binomials at 50 significant digits.

#ifndef TRACECODES_LGAMMA_HPP_
#define TRACECODES_LGAMMA_HPP_

#include <cstdint>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace tracecodes {

using Decimal = boost::multiprecision::cpp_dec_float_50;
using BigInt = boost::multiprecision::cpp_int;

struct LogGamma {
  Decimal value;      // ln Gamma(x)
  Decimal remainder;  // bound on the truncation error of the series
};

// Stirling series with exact Bernoulli coefficients after shifting the
// argument to x >= 40. Requires x > 0.
LogGamma log_gamma(const Decimal& x);
Decimal log10_gamma(const Decimal& x);

Decimal log10_of(const BigInt& n);  // requires n > 0
BigInt binomial(std::uint64_t n, std::uint64_t k);
// log10 C(n, k) through log-gamma.
Decimal log10_binomial(const Decimal& n, const Decimal& k);

}  // namespace tracecodes

#endif  // TRACECODES_LGAMMA_HPP_
