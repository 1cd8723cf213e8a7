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
#include <limits>

#include "tracecodes/errors.hpp"
#include "tracecodes/sheaf.hpp"

namespace tracecodes {

AskDescriptor make_ask(const FieldSpec& k, Poly f1, RationalFunction f2,
                       FieldElement psi_a, std::uint64_t chi_m) {
  require(psi_a.code != 0 && k.contains(psi_a),
          "ask: additive character must be nontrivial");
  require(!f2.den().is_zero(), "ask: f2 is not initialized");
  require(!f2.is_zero(), "ask: f2 must be nonzero");
  for (auto c : f1.coeffs()) require(k.contains(c), "ask: f1 coefficient outside the field");
  chi_m %= k.q() - 1;
  if (chi_m == 0) f2 = RationalFunction::one(k);
  return AskDescriptor{std::move(f1), std::move(f2), psi_a, chi_m};
}

AskDescriptor make_ask(const FieldSpec& k, Poly f1) {
  return make_ask(k, std::move(f1), RationalFunction::one(k), k.one(), 0);
}

TraceSample trace_ask(const FieldSpec& k, const AskDescriptor& d) {
  const AdditiveCharacter psi(k, d.psi_a);
  const MultiplicativeCharacter chi(k, d.chi_m);
  const std::uint64_t group = k.q() - 1;
  TraceSample s{k, {}, {}, 1, std::nullopt, false, 0, nullptr};
  s.domain.reserve(k.q());
  s.values.reserve(k.q());
  for (std::uint64_t i = 0; i < k.q(); ++i) {
    const FieldElement x = k.element(i);
    Complex kummer = 1.0;
    if (!chi.is_trivial()) {
      const FieldElement num = eval(k, d.f2.num(), x);
      const FieldElement den = eval(k, d.f2.den(), x);
      if (num.code == 0 || den.code == 0) continue;
      const std::uint64_t j =
          (k.discrete_log(num) + group - k.discrete_log(den)) % group;
      kummer = chi.from_log(j);
    }
    s.domain.push_back(x);
    s.values.push_back(psi(eval(k, d.f1, x)) * kummer);
  }
  const auto desc = std::make_shared<SheafDescriptor>(SheafDescriptor{d});
  if (d.f1.degree() < static_cast<int>(k.p())) {
    s.conductor = conductor_ask(k, d).conductor;
  }
  s.descriptor_id = descriptor_id(k, *desc);
  s.descriptor = desc;
  return s;
}

ConductorReport conductor_ask(const FieldSpec& k, const AskDescriptor& d) {
  require(d.f1.degree() < static_cast<int>(k.p()),
          "conductor_ask: deg f1 must be below the characteristic");
  ConductorReport r;
  r.rank = 1;
  const MultiplicativeCharacter chi(k, d.chi_m);
  const std::uint64_t order = chi.order();
  int total = r.genus + r.rank;

  if (!chi.is_trivial()) {
    for (const auto& [place, mult] : kummer_reduce(k, d.f2, order)) {
      (void)mult;
      SingularPoint pt;
      pt.place = place;
      pt.degree = place.degree();
      r.singular_points.push_back(pt);
      total += pt.degree;
    }
  }

  const int swan_inf = std::max(0, d.f1.degree());
  const long long ord_inf =
      static_cast<long long>(d.f2.den().degree()) - d.f2.num().degree();
  const bool kummer_at_inf =
      !chi.is_trivial() &&
      ((ord_inf % static_cast<long long>(order)) + static_cast<long long>(order)) %
              static_cast<long long>(order) != 0;
  if (swan_inf > 0 || kummer_at_inf) {
    SingularPoint inf;
    inf.at_infinity = true;
    inf.degree = 1;
    inf.swan = swan_inf;
    inf.tame = swan_inf == 0;
    r.singular_points.push_back(inf);
    total += std::max(1, swan_inf);
    r.wild_and_tame_at_infinity = swan_inf > 0 && kummer_at_inf;
  }
  r.conductor = total;
  return r;
}

Poly ask_reduce(const FieldSpec& k, const Poly& f1) {
  if (f1.degree() < 1) return Poly();
  std::vector<FieldElement> c(f1.coeffs());
  const int p = static_cast<int>(k.p());
  for (int i = f1.degree(); i >= p; --i) {
    if (i % p != 0 || c[static_cast<std::size_t>(i)].code == 0) continue;
    auto& low = c[static_cast<std::size_t>(i / p)];
    low = k.add(low, k.frobenius_inverse(c[static_cast<std::size_t>(i)]));
    c[static_cast<std::size_t>(i)] = FieldElement{0};
  }
  c[0] = FieldElement{0};
  return Poly(std::move(c));
}

std::vector<Factor> kummer_reduce(const FieldSpec& k, const RationalFunction& f2,
                                  std::uint64_t d) {
  require(!f2.is_zero(), "kummer_reduce: f2 must be nonzero");
  require(d >= 1, "kummer_reduce: order must be positive");
  std::vector<Factor> out;
  const auto reduce = [&](const Poly& part, bool negate) {
    if (part.degree() < 1) return;
    for (auto& f : factor(k, part)) {
      const std::uint64_t m = static_cast<std::uint64_t>(f.multiplicity) % d;
      const std::uint64_t r = negate ? (d - m) % d : m;
      if (r != 0) out.push_back({std::move(f.poly), static_cast<int>(r)});
    }
  };
  reduce(f2.num(), false);
  reduce(f2.den(), true);
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

bool ask_geom_isomorphic(const FieldSpec& k, const AskDescriptor& a,
                         const AskDescriptor& b) {
  require(a.psi_a == b.psi_a, "ask_geom_isomorphic: additive characters differ");
  require(a.chi_m % (k.q() - 1) == b.chi_m % (k.q() - 1),
          "ask_geom_isomorphic: multiplicative characters differ");
  const Poly diff = scale(k, sub(k, a.f1, b.f1), a.psi_a);
  if (!ask_reduce(k, diff).is_zero()) return false;
  const MultiplicativeCharacter chi(k, a.chi_m);
  if (chi.is_trivial()) return true;
  return kummer_reduce(k, div(k, a.f2, b.f2), chi.order()).empty();
}

// ---- class family ----

namespace {

constexpr std::uint64_t kMaxIndex = std::uint64_t{1} << 62;

std::uint64_t checked_power(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    require(r <= kMaxIndex / base, "ask family: class count exceeds 2^62");
    r *= base;
  }
  return r;
}

}  // namespace

AskClassFamily::AskClassFamily(FieldSpec k, int c, std::uint64_t chi_m)
    : k_(std::move(k)), c_(c), chi_(k_, chi_m) {
  require(c >= 1, "ask family: conductor cap must be at least 1");
  require(static_cast<std::uint64_t>(c - 1) < k_.p(),
          "ask family: c - 1 must be below the characteristic");
  if (chi_.is_trivial()) {
    terms_ = c - 1;
    size_ = checked_power(k_.q(), terms_);
  } else if (c >= 3) {
    terms_ = c - 2;
    size_ = checked_power(k_.q(), terms_);
    require(size_ <= kMaxIndex / (chi_.order() - 1),
            "ask family: class count exceeds 2^62");
    size_ *= chi_.order() - 1;
  } else {
    terms_ = 0;
    size_ = 0;
  }
}

std::uint64_t AskClassFamily::domain_size() const {
  return trivial_chi() ? k_.q() : k_.q() - 1;
}

std::vector<FieldElement> AskClassFamily::f1_coeffs(std::uint64_t index) const {
  require(index < size_, "ask family: index out of range");
  std::vector<FieldElement> a(static_cast<std::size_t>(terms_));
  for (auto& v : a) {
    v = k_.element(index % k_.q());
    index /= k_.q();
  }
  return a;
}

std::uint64_t AskClassFamily::kummer_exponent(std::uint64_t index) const {
  require(index < size_, "ask family: index out of range");
  if (trivial_chi()) return 0;
  return index / checked_power(k_.q(), terms_) + 1;
}

AskDescriptor AskClassFamily::at(std::uint64_t index) const {
  std::vector<FieldElement> coeffs{k_.zero()};
  for (auto a : f1_coeffs(index)) coeffs.push_back(a);
  Poly f1(std::move(coeffs));
  if (trivial_chi()) return make_ask(k_, std::move(f1));
  const auto j = static_cast<int>(kummer_exponent(index));
  return make_ask(k_, std::move(f1),
                  RationalFunction::polynomial(k_, Poly::monomial(k_.one(), j)),
                  k_.one(), chi_.m());
}

int AskClassFamily::conductor_for_degree(int f1_degree) const {
  if (trivial_chi()) return 1 + std::max(0, f1_degree);
  return 2 + std::max(1, f1_degree);
}

int AskClassFamily::conductor_at(std::uint64_t index) const {
  const auto a = f1_coeffs(index);
  int deg = -1;
  for (int i = 0; i < terms_; ++i) {
    if (a[static_cast<std::size_t>(i)].code != 0) deg = i + 1;
  }
  return conductor_for_degree(deg);
}

std::vector<AskDescriptor> enumerate_ask_classes(const FieldSpec& k, int c,
                                                 std::uint64_t chi_m) {
  const AskClassFamily family(k, c, chi_m);
  std::vector<AskDescriptor> out;
  out.reserve(family.size());
  for (std::uint64_t i = 0; i < family.size(); ++i) out.push_back(family.at(i));
  return out;
}

boost::multiprecision::cpp_int count_ask_classes(const FieldSpec& k, int c,
                                                 std::uint64_t chi_m) {
  require(c >= 1, "ask family: conductor cap must be at least 1");
  require(static_cast<std::uint64_t>(c - 1) < k.p(),
          "ask family: c - 1 must be below the characteristic");
  const MultiplicativeCharacter chi(k, chi_m);
  using boost::multiprecision::cpp_int;
  const cpp_int q = k.q();
  if (chi.is_trivial()) return boost::multiprecision::pow(q, static_cast<unsigned>(c - 1));
  if (c < 3) return 0;
  return boost::multiprecision::pow(q, static_cast<unsigned>(c - 2)) *
         cpp_int(chi.order() - 1);
}

}  // namespace tracecodes
