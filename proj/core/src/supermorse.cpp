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

#include <algorithm>

#include "tracecodes/errors.hpp"
#include "tracecodes/sheaf.hpp"

namespace tracecodes {

namespace {

using Matrix = std::vector<std::vector<FieldElement>>;

FieldElement determinant(const FieldSpec& k, Matrix a) {
  const std::size_t m = a.size();
  FieldElement det = k.one();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col].code == 0) ++pivot;
    if (pivot == m) return k.zero();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = k.neg(det);
    }
    det = k.mul(det, a[col][col]);
    const FieldElement inv = k.inv(a[col][col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      if (a[r][col].code == 0) continue;
      const FieldElement factor = k.mul(a[r][col], inv);
      for (std::size_t j = col; j < m; ++j) {
        a[r][j] = k.sub(a[r][j], k.mul(factor, a[col][j]));
      }
    }
  }
  return det;
}

// Characteristic polynomial of multiplication by f on k[x]/(g), which is
// prod_{g(z) = 0} (T - f(z)). Evaluated at m + 1 points and interpolated.
Poly charpoly_of_multiplication(const FieldSpec& k, const Poly& f, const Poly& g) {
  const int m = g.degree();
  Matrix mult(static_cast<std::size_t>(m), std::vector<FieldElement>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    const Poly column = mod(k, mul(k, f, Poly::monomial(k.one(), i)), g);
    for (int r = 0; r < m; ++r) {
      mult[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = column.coeff(r);
    }
  }
  std::vector<FieldElement> nodes;
  std::vector<FieldElement> vals;
  for (int t = 0; t <= m; ++t) {
    const FieldElement node = k.element(static_cast<std::uint64_t>(t));
    Matrix shifted = mult;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        auto& e = shifted[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        e = k.neg(e);
        if (r == c) e = k.add(e, node);
      }
    }
    nodes.push_back(node);
    vals.push_back(determinant(k, std::move(shifted)));
  }
  Poly result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Poly basis = Poly::constant(k.one());
    FieldElement denom = k.one();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      basis = mul(k, basis, Poly::linear_root(k, nodes[j]));
      denom = k.mul(denom, k.sub(nodes[i], nodes[j]));
    }
    result = add(k, result, scale(k, basis, k.div(vals[i], denom)));
  }
  return result;
}

}  // namespace

SupermorseCheck check_supermorse(const FieldSpec& k, const Poly& f) {
  require(f.degree() >= 2, "check_supermorse: degree must be at least 2");
  SupermorseCheck out;
  if (f.degree() >= static_cast<int>(k.p())) {
    out.reason = "degree is not below the characteristic";
    return out;
  }
  const Poly df = derivative(k, f);
  out.critical_places = factor(k, df);
  for (const auto& pl : out.critical_places) {
    if (pl.multiplicity > 1) {
      out.reason = "derivative has a repeated zero";
      return out;
    }
  }
  out.z_count = df.degree();
  out.s_polynomial = charpoly_of_multiplication(k, f, monic(k, df));
  if (!is_squarefree(k, out.s_polynomial)) {
    out.reason = "critical values are not distinct";
    return out;
  }
  out.z_rational = roots(k, df);
  for (auto z : out.z_rational) out.s_rational.push_back(eval(k, f, z));
  out.ok = true;
  return out;
}

ConductorReport conductor_supermorse(const FieldSpec& k, const Poly& f) {
  require(f.degree() >= 2, "conductor_supermorse: degree must be at least 2");
  const SupermorseCheck check = check_supermorse(k, f);
  require(check.ok, "conductor_supermorse: not supermorse (" + check.reason + ")");
  ConductorReport r;
  r.rank = f.degree() - 1;
  for (const auto& pl : factor(k, check.s_polynomial)) {
    SingularPoint pt;
    pt.place = pl.poly;
    pt.degree = pl.poly.degree();
    r.singular_points.push_back(pt);
  }
  SingularPoint inf;
  inf.at_infinity = true;
  r.singular_points.push_back(inf);
  r.conductor = check.z_count + f.degree() - 1;
  return r;
}

TraceSample trace_supermorse(const FieldSpec& k, const Poly& f) {
  const ConductorReport report = conductor_supermorse(k, f);
  const SupermorseCheck check = check_supermorse(k, f);
  std::vector<std::uint32_t> fiber(k.q(), 0);
  for (std::uint64_t i = 0; i < k.q(); ++i) ++fiber[eval(k, f, k.element(i)).code];
  std::vector<bool> singular(k.q(), false);
  for (auto s : check.s_rational) singular[s.code] = true;

  TraceSample s{k, {}, {}, report.rank, report.conductor, false, 0, nullptr};
  for (std::uint64_t i = 0; i < k.q(); ++i) {
    const FieldElement x = k.element(i);
    if (singular[x.code]) continue;
    s.domain.push_back(x);
    s.values.emplace_back(static_cast<double>(fiber[x.code]) - 1.0, 0.0);
  }
  auto desc = std::make_shared<SheafDescriptor>(SheafDescriptor{SupermorseDescriptor{f}});
  s.descriptor_id = descriptor_id(k, *desc);
  s.descriptor = std::move(desc);
  return s;
}

std::vector<Poly> supermorse_orbit_representatives(const FieldSpec& k, int degree) {
  require(k.p() > 3, "supermorse representatives: characteristic must exceed 3");
  require(degree == 2 || degree == 3, "supermorse representatives: degree 2 or 3");
  std::vector<Poly> out;
  if (degree == 2) {
    out.push_back(Poly({k.zero(), k.zero(), k.one()}));
    for (std::uint64_t i = 1; i < k.q(); ++i) {
      const FieldElement a = k.element(i);
      if (k.discrete_log(a) % 2 == 1) {
        out.push_back(Poly({k.zero(), k.zero(), a}));
        break;
      }
    }
    return out;
  }
  for (std::uint64_t i = 1; i < k.q(); ++i) {
    out.push_back(Poly({k.zero(), k.one(), k.zero(), k.element(i)}));
  }
  return out;
}

}  // namespace tracecodes
