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

#include "tracecodes/kernel_family.hpp"

#include <cmath>

#include "tracecodes/dft.hpp"
#include "tracecodes/errors.hpp"

namespace tracecodes {

std::uint64_t KernelOrbit::members() const {
  return kind == Kind::kAdditive && only_zero ? 1 : q;
}

namespace {

// All polynomials a_lo x^lo + ... + a_hi x^hi, indexed base q.
std::vector<Poly> monomial_span(const FieldSpec& k, int lo, int hi) {
  std::vector<Poly> out{Poly()};
  for (int d = lo; d <= hi; ++d) {
    std::vector<Poly> next;
    next.reserve(out.size() * k.q());
    for (std::uint64_t i = 0; i < k.q(); ++i) {
      const Poly term = Poly::monomial(k.element(i), d);
      for (const auto& f : out) next.push_back(add(k, f, term));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

KernelFamily KernelFamily::standard(const FieldSpec& k, int c_max) {
  require(c_max >= 1, "kernel family: c_max must be at least 1");
  require(static_cast<std::uint64_t>(c_max - 1) < k.p(),
          "kernel family: c_max - 1 must be below the characteristic");
  KernelFamily fam(k);
  fam.c_max_ = c_max;
  const std::uint64_t q = k.q();
  const AdditiveCharacter psi(k, k.one());

  // Trivial chi: f1 = top + a x with deg top <= c_max - 1.
  for (const Poly& top : monomial_span(k, 2, c_max - 1)) {
    KernelOrbit o;
    o.kind = KernelOrbit::Kind::kAdditive;
    o.q = q;
    o.label = "ask-trivial";
    o.only_zero = c_max == 1;
    o.base.resize(q);
    for (std::uint64_t i = 0; i < q; ++i) o.base[i] = psi(eval(k, top, k.element(i)));
    o.cond_other = 1 + std::max(1, top.degree());
    o.cond_zero = top.is_zero() ? 1 : o.cond_other;
    o.descriptor = SheafDescriptor{make_ask(k, top)};
    fam.orbits_.push_back(std::move(o));
  }

  // Quadratic chi, f2 = x, f1 = top + a x with deg top <= c_max - 2.
  if (q % 2 == 1 && c_max >= 3) {
    const std::uint64_t m = (q - 1) / 2;
    const MultiplicativeCharacter chi(k, m);
    for (const Poly& top : monomial_span(k, 2, c_max - 2)) {
      KernelOrbit o;
      o.kind = KernelOrbit::Kind::kAdditive;
      o.q = q;
      o.label = "ask-quadratic";
      o.base.resize(q);
      for (std::uint64_t i = 1; i < q; ++i) {
        const FieldElement x = k.element(i);
        o.base[i] = psi(eval(k, top, x)) * chi(x);
      }
      o.cond_other = 2 + std::max(1, top.degree());
      o.cond_zero = o.cond_other;
      o.descriptor = SheafDescriptor{make_ask(
          k, top, RationalFunction::polynomial(k, Poly::x(k)), k.one(), m)};
      fam.orbits_.push_back(std::move(o));
    }
  }

  if (k.p() > 3) {
    for (int degree : {2, 3}) {
      for (const Poly& f : supermorse_orbit_representatives(k, degree)) {
        const SupermorseCheck check = check_supermorse(k, f);
        if (!check.ok) continue;
        KernelOrbit o;
        o.kind = KernelOrbit::Kind::kTranslation;
        o.q = q;
        o.label = degree == 2 ? "supermorse-2" : "supermorse-3";
        o.base.assign(q, Complex(-1.0, 0.0));
        for (std::uint64_t i = 0; i < q; ++i) o.base[eval(k, f, k.element(i)).code] += 1.0;
        o.cond_other = conductor_supermorse(k, f).conductor;
        o.cond_zero = o.cond_other;
        o.singular = check.s_rational;
        o.descriptor = SheafDescriptor{SupermorseDescriptor{f}};
        fam.orbits_.push_back(std::move(o));
      }
    }
  }

  if (k.is_prime_field()) {
    for (const auto& o : fam.orbits_) {
      if (o.kind != KernelOrbit::Kind::kTranslation) {
        fam.base_hat_.emplace_back();
        continue;
      }
      std::vector<Complex> hat(q);
      cyclic_dft(o.base, hat, +1);
      fam.base_hat_.push_back(std::move(hat));
    }
  }
  return fam;
}

std::uint64_t KernelFamily::size() const {
  std::uint64_t n = 0;
  for (const auto& o : orbits_) n += o.members();
  return n;
}

nlohmann::json KernelFamily::manifest() const {
  nlohmann::json groups = nlohmann::json::object();
  for (const auto& o : orbits_) {
    auto& g = groups[o.label];
    if (g.is_null()) g = {{"orbits", 0}, {"kernels", 0}, {"max_conductor", 0}};
    g["orbits"] = g["orbits"].get<std::uint64_t>() + 1;
    g["kernels"] = g["kernels"].get<std::uint64_t>() + o.members();
    g["max_conductor"] = std::max(g["max_conductor"].get<int>(), o.cond_other);
  }
  return {{"q", k_.q()},
          {"c_max", c_max_},
          {"kernels", size()},
          {"groups", groups},
          {"extension", "by zero off each domain"},
          {"coverage", "finite explicit family; the all-sheaves hypothesis is assumed"}};
}

CorrelationSummary KernelFamily::correlate(const std::vector<Complex>& phi,
                                           double s) const {
  const std::uint64_t q = k_.q();
  require(phi.size() == q, "correlate: function table must have q entries");
  CorrelationSummary out;
  out.kernels = size();
  // Squared magnitudes throughout; square roots are taken once at the end.
  double best_ratio2 = 0;
  double best_abs2 = 0;
  const auto consider = [&](const KernelOrbit& o, std::uint64_t param, Complex value,
                            int cond, double weight2) {
    const double v2 = std::norm(value);
    best_abs2 = std::max(best_abs2, v2);
    if (v2 * weight2 > best_ratio2) {
      best_ratio2 = v2 * weight2;
      out.argmax_orbit = o.label;
      out.argmax_param = param;
      out.argmax_conductor = cond;
    }
  };
  const auto weight2 = [s](int cond) { return std::pow(static_cast<double>(cond), -2.0 * s); };

  const bool prime = k_.is_prime_field();
  const AdditiveCharacter psi(k_, k_.one());
  std::vector<Complex> phi_hat;
  if (prime) {
    phi_hat.resize(q);
    cyclic_dft(phi, phi_hat, -1);
  }
  std::vector<Complex> work(q);
  std::vector<Complex> result(q);
  for (std::size_t oi = 0; oi < orbits_.size(); ++oi) {
    const KernelOrbit& o = orbits_[oi];
    const double w_zero = weight2(o.cond_zero);
    const double w_other = weight2(o.cond_other);
    if (o.kind == KernelOrbit::Kind::kAdditive) {
      for (std::uint64_t x = 0; x < q; ++x) work[x] = o.base[x] * phi[x];
      if (o.only_zero) {
        Complex sum = 0;
        for (auto w : work) sum += w;
        consider(o, 0, sum, o.cond_zero, w_zero);
        continue;
      }
      if (prime) {
        cyclic_dft(work, result, +1);
      } else {
        for (std::uint64_t a = 0; a < q; ++a) {
          Complex sum = 0;
          for (std::uint64_t x = 0; x < q; ++x) {
            if (work[x] != Complex(0.0, 0.0)) {
              sum += work[x] * psi(k_.mul(k_.element(a), k_.element(x)));
            }
          }
          result[a] = sum;
        }
      }
      for (std::uint64_t a = 0; a < q; ++a) {
        if (a == 0) {
          consider(o, a, result[a], o.cond_zero, w_zero);
        } else {
          consider(o, a, result[a], o.cond_other, w_other);
        }
      }
    } else {
      if (prime) {
        // sum_y G(y) phi(y + t) for every t through one inverse DFT.
        const auto& hat = base_hat_[oi];
        for (std::uint64_t a = 0; a < q; ++a) work[a] = phi_hat[a] * hat[a];
        cyclic_dft(work, result, +1);
        for (auto& v : result) v /= static_cast<double>(q);
      } else {
        for (std::uint64_t t = 0; t < q; ++t) {
          const FieldElement tt = k_.element(t);
          Complex sum = 0;
          for (std::uint64_t y = 0; y < q; ++y) {
            if (o.base[y] == Complex(0.0, 0.0)) continue;
            sum += o.base[y] * phi[k_.add(k_.element(y), tt).code];
          }
          result[t] = sum;
        }
      }
      for (std::uint64_t t = 0; t < q; ++t) {
        const FieldElement tt = k_.element(t);
        Complex value = result[t];
        for (auto sp : o.singular) value -= o.base[sp.code] * phi[k_.add(sp, tt).code];
        consider(o, t, value, o.cond_other, w_other);
      }
    }
  }
  out.max_ratio = std::sqrt(best_ratio2);
  out.max_abs = std::sqrt(best_abs2);
  return out;
}

std::vector<TraceSample> KernelFamily::materialize() const {
  std::vector<TraceSample> out;
  out.reserve(size());
  for (const auto& o : orbits_) {
    if (o.kind == KernelOrbit::Kind::kAdditive) {
      const auto& base = std::get<AskDescriptor>(o.descriptor.value);
      for (std::uint64_t a = 0; a < o.members(); ++a) {
        AskDescriptor d = base;
        d.f1 = add(k_, d.f1, Poly::monomial(k_.element(a), 1));
        out.push_back(trace_ask(k_, d));
      }
    } else {
      const Poly& f = std::get<SupermorseDescriptor>(o.descriptor.value).f;
      for (std::uint64_t t = 0; t < o.members(); ++t) {
        out.push_back(trace_supermorse(k_, add(k_, f, Poly::constant(k_.element(t)))));
      }
    }
  }
  return out;
}

}  // namespace tracecodes
