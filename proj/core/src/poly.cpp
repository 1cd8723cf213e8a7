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

#include "tracecodes/poly.hpp"

#include <algorithm>

#include "tracecodes/errors.hpp"

namespace tracecodes {

Poly::Poly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

Poly Poly::monomial(FieldElement c, int degree) {
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const FieldSpec& k, FieldElement root) {
  return Poly({k.neg(root), k.one()});
}

Poly Poly::x(const FieldSpec& k) { return Poly({k.zero(), k.one()}); }

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return FieldElement{0};
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldElement Poly::leading() const {
  return coeffs_.empty() ? FieldElement{0} : coeffs_.back();
}

Poly add(const FieldSpec& k, const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElement> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const FieldElement u = i < x.size() ? x[i] : FieldElement{0};
    const FieldElement v = i < y.size() ? y[i] : FieldElement{0};
    out[i] = k.add(u, v);
  }
  return Poly(std::move(out));
}

Poly neg(const FieldSpec& k, const Poly& a) {
  std::vector<FieldElement> out(a.coeffs());
  for (auto& c : out) c = k.neg(c);
  return Poly(std::move(out));
}

Poly sub(const FieldSpec& k, const Poly& a, const Poly& b) {
  return add(k, a, neg(k, b));
}

Poly mul(const FieldSpec& k, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FieldElement> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].code == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] = k.add(out[i + j], k.mul(x[i], y[j]));
    }
  }
  return Poly(std::move(out));
}

Poly scale(const FieldSpec& k, const Poly& a, FieldElement c) {
  std::vector<FieldElement> out(a.coeffs());
  for (auto& v : out) v = k.mul(v, c);
  return Poly(std::move(out));
}

Poly pow(const FieldSpec& k, const Poly& a, unsigned e) {
  Poly result = Poly::constant(k.one());
  Poly base = a;
  while (e > 0) {
    if (e & 1U) result = mul(k, result, base);
    e >>= 1U;
    if (e > 0) base = mul(k, base, base);
  }
  return result;
}

std::pair<Poly, Poly> divmod(const FieldSpec& k, const Poly& a, const Poly& b) {
  require(!b.is_zero(), "poly: division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<FieldElement> rem(a.coeffs());
  const int db = b.degree();
  std::vector<FieldElement> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const FieldElement lead_inv = k.inv(b.leading());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    const FieldElement c = rem[static_cast<std::size_t>(i)];
    if (c.code == 0) continue;
    const FieldElement t = k.mul(c, lead_inv);
    quot[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - db + j)];
      r = k.sub(r, k.mul(t, bc[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly mod(const FieldSpec& k, const Poly& a, const Poly& b) {
  return divmod(k, a, b).second;
}

Poly monic(const FieldSpec& k, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(k, a, k.inv(a.leading()));
}

Poly gcd(const FieldSpec& k, const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = mod(k, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(k, x);
}

Poly derivative(const FieldSpec& k, const Poly& a) {
  if (a.degree() < 1) return Poly();
  std::vector<FieldElement> out(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = k.mul(k.from_int(i), a.coeff(i));
  }
  return Poly(std::move(out));
}

FieldElement eval(const FieldSpec& k, const Poly& a, FieldElement x) {
  FieldElement acc{0};
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), c[i]);
  return acc;
}

Poly pow_mod(const FieldSpec& k, const Poly& base, std::uint64_t e,
             const Poly& m) {
  Poly result = mod(k, Poly::constant(k.one()), m);
  Poly b = mod(k, base, m);
  while (e > 0) {
    if (e & 1U) result = mod(k, mul(k, result, b), m);
    e >>= 1U;
    if (e > 0) b = mod(k, mul(k, b, b), m);
  }
  return result;
}

namespace {

// Inverse of the Frobenius on a polynomial whose exponents are all multiples
// of p: sum a_{jp} x^{jp} = (sum a_{jp}^{1/p} x^j)^p.
Poly pth_root(const FieldSpec& k, const Poly& a) {
  const int p = static_cast<int>(k.p());
  std::vector<FieldElement> out(static_cast<std::size_t>(a.degree() / p + 1));
  for (int j = 0; j * p <= a.degree(); ++j) {
    out[static_cast<std::size_t>(j)] = k.frobenius_inverse(a.coeff(j * p));
  }
  return Poly(std::move(out));
}

void squarefree_decompose(const FieldSpec& k, const Poly& f, int scale_mult,
                          std::vector<Factor>& out) {
  if (f.degree() < 1) return;
  const Poly fp = derivative(k, f);
  if (fp.is_zero()) {
    squarefree_decompose(k, pth_root(k, f), scale_mult * static_cast<int>(k.p()), out);
    return;
  }
  Poly c = gcd(k, f, fp);
  Poly w = divmod(k, f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(k, w, c);
    Poly z = divmod(k, w, y).first;
    if (z.degree() > 0) out.push_back({monic(k, z), i * scale_mult});
    ++i;
    w = std::move(y);
    c = divmod(k, c, w).first;
  }
  if (c.degree() > 0) {
    squarefree_decompose(k, pth_root(k, c), scale_mult * static_cast<int>(k.p()), out);
  }
}

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Splits a squarefree monic f all of whose irreducible factors have degree d.
void equal_degree_split(const FieldSpec& k, const Poly& f, int d, SplitMix& rng,
                        std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t q = k.q();
  for (;;) {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = k.element(rng.next() % q);
    Poly a(std::move(coeffs));
    if (a.degree() < 1) continue;
    Poly b;
    if (k.p() == 2) {
      // Trace map a + a^2 + ... + a^(2^(n d - 1)).
      const int steps = static_cast<int>(k.n()) * d;
      Poly term = mod(k, a, f);
      Poly acc = term;
      for (int i = 1; i < steps; ++i) {
        term = mod(k, mul(k, term, term), f);
        acc = add(k, acc, term);
      }
      b = acc;
    } else {
      // a^((q^d - 1)/2) = prod_i (a^((q-1)/2))^(q^i)
      Poly t = pow_mod(k, a, (q - 1) / 2, f);
      Poly acc = t;
      Poly cur = t;
      for (int i = 1; i < d; ++i) {
        cur = pow_mod(k, cur, q, f);
        acc = mod(k, mul(k, acc, cur), f);
      }
      b = sub(k, acc, Poly::constant(k.one()));
    }
    Poly g = gcd(k, f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(k, g, d, rng, out);
      equal_degree_split(k, divmod(k, f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const FieldSpec& k, const Poly& a) {
  require(!a.is_zero(), "factor: zero polynomial");
  std::vector<Factor> squarefree;
  squarefree_decompose(k, monic(k, a), 1, squarefree);

  std::vector<Factor> out;
  SplitMix rng{0x5eedULL};
  const Poly x = Poly::x(k);
  for (const auto& [sf, mult] : squarefree) {
    // Distinct-degree factorization.
    Poly f = sf;
    Poly h = mod(k, x, f);
    for (int i = 1; f.degree() >= 2 * i; ++i) {
      h = pow_mod(k, h, k.q(), f);
      Poly g = gcd(k, f, sub(k, h, x));
      if (g.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree_split(k, g, i, rng, pieces);
        for (auto& piece : pieces) out.push_back({monic(k, piece), mult});
        f = divmod(k, f, g).first;
        h = mod(k, h, f);
      }
    }
    if (f.degree() > 0) out.push_back({monic(k, f), mult});
  }

  std::sort(out.begin(), out.end(),
            [](const Factor& u, const Factor& v) { return u.poly < v.poly; });
  // The squarefree parts are coprime, so equal factors cannot appear twice;
  // merge defensively all the same.
  std::vector<Factor> merged;
  for (auto& f : out) {
    if (!merged.empty() && merged.back().poly == f.poly) {
      merged.back().multiplicity += f.multiplicity;
    } else {
      merged.push_back(std::move(f));
    }
  }
  return merged;
}

bool is_irreducible(const FieldSpec& k, const Poly& a) {
  if (a.degree() < 1) return false;
  auto f = factor(k, a);
  return f.size() == 1 && f[0].multiplicity == 1;
}

bool is_squarefree(const FieldSpec& k, const Poly& a) {
  if (a.degree() < 1) return true;
  for (const auto& f : factor(k, a)) {
    if (f.multiplicity > 1) return false;
  }
  return true;
}

std::vector<FieldElement> roots(const FieldSpec& k, const Poly& a) {
  std::vector<FieldElement> out;
  if (a.degree() < 1) return out;
  for (const auto& f : factor(k, a)) {
    if (f.poly.degree() == 1) out.push_back(k.neg(f.poly.coeff(0)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalFunction::RationalFunction(const FieldSpec& k, Poly num, Poly den) {
  require(!den.is_zero(), "rational function: zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::constant(k.one());
    return;
  }
  const Poly g = gcd(k, num, den);
  num = divmod(k, num, g).first;
  den = divmod(k, den, g).first;
  const FieldElement lead = den.leading();
  const FieldElement lead_inv = k.inv(lead);
  num_ = scale(k, num, lead_inv);
  den_ = scale(k, den, lead_inv);
}

RationalFunction RationalFunction::one(const FieldSpec& k) {
  return RationalFunction(k, Poly::constant(k.one()), Poly::constant(k.one()));
}

RationalFunction RationalFunction::polynomial(const FieldSpec& k, Poly num) {
  return RationalFunction(k, std::move(num), Poly::constant(k.one()));
}

RationalFunction mul(const FieldSpec& k, const RationalFunction& a,
                     const RationalFunction& b) {
  return RationalFunction(k, mul(k, a.num(), b.num()), mul(k, a.den(), b.den()));
}

RationalFunction div(const FieldSpec& k, const RationalFunction& a,
                     const RationalFunction& b) {
  require(!b.is_zero(), "rational function: division by zero");
  return RationalFunction(k, mul(k, a.num(), b.den()), mul(k, a.den(), b.num()));
}

std::optional<FieldElement> rational_eval(const FieldSpec& k,
                                          const RationalFunction& f,
                                          FieldElement x) {
  const FieldElement d = eval(k, f.den(), x);
  if (d.code == 0) return std::nullopt;
  return k.div(eval(k, f.num(), x), d);
}

}  // namespace tracecodes
