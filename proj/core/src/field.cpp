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

#include "tracecodes/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "tracecodes/errors.hpp"
#include "internal.hpp"

namespace tracecodes {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Dense polynomials over Z/p, ascending coefficients. Only used to build and
// validate the modulus and for table-free multiplication.
using ZpPoly = std::vector<std::uint64_t>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// a mod m for monic m.
ZpPoly mod_monic(ZpPoly a, const ZpPoly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

ZpPoly mul_mod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m,
               std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return mod_monic(std::move(prod), m, p);
}

ZpPoly pow_mod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint64_t p) {
  ZpPoly result{1};
  base = mod_monic(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m, p);
    e >>= 1;
    if (e > 0) base = mul_mod(base, base, m, p);
  }
  return result;
}

ZpPoly gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, b made monic first
    const std::uint64_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = c * li % p;
    a = mod_monic(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test: m (monic, degree n) is irreducible iff x^(p^n) = x mod m and
// gcd(x^(p^(n/r)) - x, m) = 1 for every prime r dividing n.
bool is_irreducible(const ZpPoly& m, std::uint64_t p) {
  const std::uint64_t n = m.size() - 1;
  if (n == 1) return true;
  auto frob_power = [&](std::uint64_t k) {
    ZpPoly h{0, 1};
    for (std::uint64_t i = 0; i < k; ++i) h = pow_mod(h, p, m, p);
    return h;
  };
  ZpPoly full = frob_power(n);
  ZpPoly x = mod_monic(ZpPoly{0, 1}, m, p);
  if (full != x) return false;
  for (std::uint64_t r : prime_divisors(n)) {
    ZpPoly h = frob_power(n / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    ZpPoly g = gcd(h, m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

struct FieldSpec::Impl {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint64_t> place;  // place[i] = p^(n-1-i)
  std::uint64_t generator = 0;
  std::vector<std::uint32_t> trace_basis;  // Tr(t^i)
  std::vector<std::uint32_t> log;          // size q (entry 0 unused) or empty
  std::vector<std::uint32_t> exp;          // size q-1 or empty
  std::vector<std::uint64_t> order_primes;  // prime divisors of q-1

  std::uint32_t digit(std::uint64_t code, std::uint32_t i) const {
    return static_cast<std::uint32_t>((code / place[i]) % p);
  }

  ZpPoly to_poly(std::uint64_t code) const {
    ZpPoly out(n);
    for (std::uint32_t i = 0; i < n; ++i) out[i] = digit(code, i);
    trim(out);
    return out;
  }

  std::uint64_t from_poly(const ZpPoly& a) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < a.size() && i < n; ++i) code += a[i] * place[i];
    return code;
  }

  ZpPoly modulus_poly() const {
    return ZpPoly(modulus.begin(), modulus.end());
  }

  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
    return from_poly(mul_mod(to_poly(a), to_poly(b), modulus_poly(), p));
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (n == 1) {
      const std::uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t d = digit(a, i) + digit(b, i);
      if (d >= p) d -= p;
      code += d * place[i];
    }
    return code;
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (n == 1) return a == 0 ? 0 : p - a;
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t d = digit(a, i);
      code += (d == 0 ? 0 : p - d) * place[i];
    }
    return code;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log.empty()) {
      std::uint64_t e = std::uint64_t{log[a]} + log[b];
      if (e >= q - 1) e -= q - 1;
      return exp[e];
    }
    if (n == 1) return a * b % p;
    return mul_slow(a, b);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    if (e == 0) return place[0];  // one
    if (a == 0) return 0;
    if (!log.empty()) {
      const internal::Uint128 t = static_cast<internal::Uint128>(log[a]) * e;
      return exp[static_cast<std::uint64_t>(t % (q - 1))];
    }
    std::uint64_t result = place[0];
    std::uint64_t base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }
};

FieldSpec FieldSpec::build(std::uint32_t p, std::uint32_t n,
                           std::optional<std::vector<std::uint32_t>> modulus,
                           FieldOptions options) {
  require(p >= 2 && p < kMaxPrime && is_prime(p),
          "field: p = " + std::to_string(p) + " is not a prime below 2^20");
  require(n >= 1, "field: extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    require(q <= (std::uint64_t{1} << 62) / p, "field: q = p^n exceeds 2^62");
    q *= p;
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->n = n;
  impl->q = q;
  impl->place.assign(n, 1);
  for (std::uint32_t i = n; i-- > 1;) impl->place[i - 1] = impl->place[i] * p;

  if (modulus) {
    const auto& m = *modulus;
    require(m.size() == n + 1, "field: modulus must have n + 1 coefficients");
    require(m.back() == 1, "field: modulus must be monic");
    for (auto c : m) require(c < p, "field: modulus coefficients must be < p");
    ZpPoly mp(m.begin(), m.end());
    require(is_irreducible(mp, p), "field: modulus is reducible over Z/p");
    impl->modulus = m;
  } else if (n == 1) {
    impl->modulus = {0, 1};
  } else {
    // Lexicographic order on the ascending coefficient list (c_0 most
    // significant), fixing the leading 1.
    std::uint64_t count = q;  // p^n candidates for (c_0, ..., c_{n-1})
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      ZpPoly cand(n + 1, 0);
      std::uint64_t rest = idx;
      for (std::uint32_t i = n; i-- > 0;) {
        cand[i] = rest % p;
        rest /= p;
      }
      cand[n] = 1;
      if (cand[0] == 0) continue;  // divisible by x
      if (is_irreducible(cand, p)) {
        impl->modulus.assign(cand.begin(), cand.end());
        found = true;
      }
    }
    require(found, "field: no irreducible modulus found");
  }

  impl->order_primes = prime_divisors(q - 1);
  // Generator: first element in enumeration order whose order is q - 1.
  for (std::uint64_t code = 1; code < q; ++code) {
    bool ok = true;
    for (std::uint64_t r : impl->order_primes) {
      if (impl->pow(code, (q - 1) / r) == impl->place[0]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      impl->generator = code;
      break;
    }
  }
  require(impl->generator != 0 || q == 2, "field: no generator found");
  if (q == 2) impl->generator = impl->place[0];

  if (q <= options.table_cap) {
    impl->exp.resize(q - 1);
    impl->log.assign(q, 0);
    std::uint64_t x = impl->place[0];
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
      impl->exp[j] = static_cast<std::uint32_t>(x);
      impl->log[x] = static_cast<std::uint32_t>(j);
      x = (n == 1) ? x * impl->generator % p : impl->mul_slow(x, impl->generator);
    }
  }

  // Tr(t^i) = sum_j (t^i)^(p^j), an element of the prime subfield.
  impl->trace_basis.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t ti = impl->place[i];  // coefficient vector e_i
    std::uint64_t acc = 0;
    std::uint64_t term = ti;
    for (std::uint32_t j = 0; j < n; ++j) {
      acc = impl->add(acc, term);
      term = impl->pow(term, p);
    }
    impl->trace_basis[i] = impl->digit(acc, 0);
  }
  return FieldSpec(std::move(impl));
}

std::uint32_t FieldSpec::p() const { return impl_->p; }
std::uint32_t FieldSpec::n() const { return impl_->n; }
std::uint64_t FieldSpec::q() const { return impl_->q; }
std::span<const std::uint32_t> FieldSpec::modulus() const {
  return impl_->modulus;
}
FieldElement FieldSpec::generator() const { return {impl_->generator}; }
bool FieldSpec::has_tables() const { return !impl_->log.empty(); }

FieldElement FieldSpec::one() const { return {impl_->place[0]}; }

FieldElement FieldSpec::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(impl_->p);
  if (r < 0) r += impl_->p;
  return {static_cast<std::uint64_t>(r) * impl_->place[0]};
}

FieldElement FieldSpec::element(std::uint64_t index) const {
  require(index < impl_->q, "field: element index out of range");
  return {index};
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  require(coeffs.size() <= impl_->n,
          "field: element has more than n coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    require(coeffs[i] < impl_->p, "field: element coefficient not reduced mod p");
    code += std::uint64_t{coeffs[i]} * impl_->place[i];
  }
  return {code};
}

std::vector<std::uint32_t> FieldSpec::coeffs(FieldElement x) const {
  std::vector<std::uint32_t> out(impl_->n);
  for (std::uint32_t i = 0; i < impl_->n; ++i) out[i] = impl_->digit(x.code, i);
  return out;
}

std::uint32_t FieldSpec::coeff(FieldElement x, std::uint32_t i) const {
  return impl_->digit(x.code, i);
}

std::uint32_t FieldSpec::to_prime(FieldElement x) const {
  return impl_->digit(x.code, 0);
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  return {impl_->add(a.code, b.code)};
}
FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const {
  return {impl_->add(a.code, impl_->neg(b.code))};
}
FieldElement FieldSpec::neg(FieldElement a) const { return {impl_->neg(a.code)}; }
FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  return {impl_->mul(a.code, b.code)};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  require(a.code != 0, "field: zero has no inverse");
  if (has_tables()) {
    const std::uint64_t l = impl_->log[a.code];
    return {impl_->exp[l == 0 ? 0 : impl_->q - 1 - l]};
  }
  return {impl_->pow(a.code, impl_->q - 2)};
}

FieldElement FieldSpec::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
  return {impl_->pow(a.code, e)};
}

FieldElement FieldSpec::frobenius(FieldElement a) const {
  return {impl_->pow(a.code, impl_->p)};
}

FieldElement FieldSpec::frobenius_inverse(FieldElement a) const {
  return {impl_->pow(a.code, impl_->q / impl_->p)};
}

std::uint32_t FieldSpec::trace(FieldElement a) const {
  if (impl_->n == 1) return static_cast<std::uint32_t>(a.code);
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < impl_->n; ++i) {
    acc += std::uint64_t{impl_->digit(a.code, i)} * impl_->trace_basis[i];
  }
  return static_cast<std::uint32_t>(acc % impl_->p);
}

std::uint64_t FieldSpec::discrete_log(FieldElement a) const {
  require(a.code != 0 && a.code < impl_->q, "discrete_log: argument must be nonzero");
  if (has_tables()) return impl_->log[a.code];
  // Baby-step giant-step.
  const std::uint64_t order = impl_->q - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m);
  std::uint64_t x = impl_->place[0];
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = impl_->mul(x, impl_->generator);
  }
  const std::uint64_t giant = impl_->pow(impl_->pow(impl_->generator, m), order - 1);
  std::uint64_t y = a.code;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(y); it != baby.end()) {
      return (i * m + it->second) % order;
    }
    y = impl_->mul(y, giant);
  }
  throw PreconditionError("discrete_log: element not in the group");
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->n == b.impl_->n &&
         a.impl_->modulus == b.impl_->modulus;
}

}  // namespace tracecodes
