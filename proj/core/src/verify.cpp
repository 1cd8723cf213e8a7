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

#include "tracecodes/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "tracecodes/dft.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/io.hpp"
#include "tracecodes/orthogonality.hpp"
#include "tracecodes/parallel.hpp"
#include "tracecodes/spherical_bounds.hpp"
#include "tracecodes/trace_norm.hpp"
#include "tracecodes/version.hpp"

namespace tracecodes {

using nlohmann::json;

namespace {

// Bound multiplier used by the injected-violation self-test.
constexpr double kInjectedScale = 1e-3;

struct Context {
  bool full = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  double scale = 1.0;  // kInjectedScale for the injected criterion
  bool injected = false;
};

std::string yes_no(bool v) { return v ? "ok" : "FAILED"; }

// ---- 1: quasi-orthogonality ----

// <psi(f), psi(g) chi> for a trivial-chi member and a quadratic-chi member:
// (1/q) sum_{x != 0} psi(d1 x + d2 x^2) chi(x) with (d1, d2) = f - g. One DFT
// over d1 per d2.
json cross_family_check(const FieldSpec& k, double bound, unsigned jobs,
                        std::uint64_t& violations, double& max_abs) {
  const std::uint64_t q = k.q();
  const AdditiveCharacter psi(k, k.one());
  const MultiplicativeCharacter chi(k, (q - 1) / 2);
  std::vector<double> block_max(q, 0.0);
  std::vector<std::uint64_t> block_viol(q, 0);
  parallel_for(q, jobs, [&](std::size_t d2) {
    std::vector<Complex> b(q, Complex(0.0, 0.0));
    std::vector<Complex> out(q);
    const FieldElement c2 = k.element(d2);
    for (std::uint64_t xi = 1; xi < q; ++xi) {
      const FieldElement x = k.element(xi);
      b[xi] = psi(k.mul(c2, k.mul(x, x))) * chi(x);
    }
    cyclic_dft(b, out, +1);
    for (auto v : out) {
      const double a = std::abs(v) / static_cast<double>(q);
      block_max[d2] = std::max(block_max[d2], a);
      if (!within_bound(a, bound)) ++block_viol[d2];
    }
  });
  violations = 0;
  max_abs = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    violations += block_viol[i];
    max_abs = std::max(max_abs, block_max[i]);
  }
  return {{"difference_classes", q * q},
          {"bound", bound},
          {"max_abs", max_abs},
          {"violations", violations}};
}

CriterionResult criterion1(const Context& ctx) {
  CriterionResult r;
  r.name = "quasi-orthogonality";
  const auto t0 = std::chrono::steady_clock::now();
  const int c = 3;
  bool offdiag_ok = true;
  bool diag_ok = true;
  json fields = json::array();
  std::vector<std::uint32_t> primes = {101};
  if (ctx.full) primes.push_back(499);
  for (std::uint32_t p : primes) {
    const FieldSpec k = FieldSpec::build(p);
    const double bound = 3.0 * c * 1 * 1 / std::sqrt(static_cast<double>(p)) * ctx.scale;
    json fj = {{"q", p}, {"bound", bound}};
    for (std::uint64_t chi : {std::uint64_t{0}, std::uint64_t{(p - 1) / 2}}) {
      const AskClassFamily fam(k, c, chi);
      const FamilyGramReport rep = verify_gram_family(fam, ctx.jobs);
      const bool off = rep.violation_count == 0 && within_bound(rep.max_offdiagonal, bound);
      const bool one = rep.diagonal_min == 1.0 && rep.diagonal_max == 1.0;
      offdiag_ok = offdiag_ok && off;
      diag_ok = diag_ok && one;
      fj[chi == 0 ? "trivial_chi" : "quadratic_chi"] = {
          {"family_size", rep.family_size},
          {"pairs", rep.pair_count},
          {"difference_classes", rep.differences_checked},
          {"max_offdiagonal", rep.max_offdiagonal},
          {"offdiagonal_violations", rep.violation_count},
          {"tight_violations", rep.tight_violations},
          {"diagonal_min", rep.diagonal_min},
          {"diagonal_max", rep.diagonal_max},
          {"diagonal_expected_U_over_q", rep.diagonal_expected},
          {"diagonal_exactly_U_over_q", rep.diagonal_exact},
          {"diagonal_within_3c_over_sqrt_q", rep.diagonal_within_bound},
          {"diagonal_equals_1", one}};
    }
    std::uint64_t cross_viol = 0;
    double cross_max = 0;
    fj["cross_family"] = cross_family_check(k, bound, ctx.jobs, cross_viol, cross_max);
    offdiag_ok = offdiag_ok && cross_viol == 0;
    fields.push_back(fj);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool time_ok = secs <= 60.0;
  r.detail = {{"fields", fields},
              {"offdiagonal_ok", offdiag_ok},
              {"diagonal_equals_1", diag_ok},
              {"time_limit_seconds", 60}};
  r.pass = offdiag_ok && diag_ok && time_ok;
  r.summary = "off-diagonal " + yes_no(offdiag_ok) + ", diagonal == 1 " + yes_no(diag_ok) +
              (diag_ok ? "" : " (quadratic-chi members live on G_m: <K,K> = (q-1)/q)") +
              ", time " + yes_no(time_ok);
  return r;
}

// ---- 2: Weil bound oracle ----

// Independent evaluation on a prime field: integer Horner, then exp(2 pi i v/p).
double weil_sum_abs(std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
  Complex sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = (v * x + *it) % p;
    sum += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(p));
  }
  return std::abs(sum);
}

CriterionResult criterion2(const Context& ctx) {
  CriterionResult r;
  r.name = "weil-oracle";
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double worst_ratio = 0;
  json per_q = json::array();
  const auto check = [&](std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    const double v = weil_sum_abs(p, coeffs);
    const double bound = ((deg - 1) * std::sqrt(static_cast<double>(p)) + 1e-6) * ctx.scale;
    ++checked;
    if (v > bound) ++violations;
    if (deg >= 2) worst_ratio = std::max(worst_ratio, v / ((deg - 1) * std::sqrt(double(p))));
  };
  for (std::uint64_t p : {7, 11}) {
    const std::uint64_t before = checked;
    for (int deg = 1; deg <= 4; ++deg) {
      std::vector<std::uint64_t> coeffs(deg + 1, 0);
      std::uint64_t total = 1;
      for (int i = 0; i <= deg; ++i) total *= p;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i <= deg; ++i) {
          coeffs[i] = t % p;
          t /= p;
        }
        if (coeffs[deg] == 0) continue;
        check(p, coeffs);
      }
    }
    per_q.push_back({{"q", p}, {"mode", "exhaustive"}, {"polynomials", checked - before}});
  }
  {
    const std::uint64_t p = 101;
    std::mt19937_64 rng(ctx.seed ^ 0x2ULL);
    std::uniform_int_distribution<int> deg_pick(1, 4);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    std::uniform_int_distribution<std::uint64_t> lead(1, p - 1);
    const std::uint64_t before = checked;
    for (int t = 0; t < 1000; ++t) {
      const int deg = deg_pick(rng);
      std::vector<std::uint64_t> coeffs(deg + 1);
      for (int i = 0; i < deg; ++i) coeffs[i] = coeff(rng);
      coeffs[deg] = lead(rng);
      check(p, coeffs);
    }
    per_q.push_back({{"q", p}, {"mode", "random"}, {"polynomials", checked - before}});
  }
  // The library's additive character must agree with the oracle.
  double library_gap = 0;
  {
    const FieldSpec k = FieldSpec::build(101);
    const std::vector<std::uint64_t> coeffs = {3, 0, 1, 5};
    Poly f({k.from_int(3), k.from_int(0), k.from_int(1), k.from_int(5)});
    const AdditiveCharacter psi(k, k.one());
    Complex s = 0;
    for (std::uint64_t x = 0; x < k.q(); ++x) s += psi(eval(k, f, k.element(x)));
    library_gap = std::abs(std::abs(s) - weil_sum_abs(101, coeffs));
  }
  r.detail = {{"per_q", per_q},
              {"checked", checked},
              {"violations", violations},
              {"max_ratio_to_weil", worst_ratio},
              {"library_vs_oracle_gap", library_gap}};
  r.pass = violations == 0 && library_gap <= 1e-9;
  r.summary = std::to_string(checked) + " sums, " + std::to_string(violations) + " violations";
  return r;
}

// ---- 3: enumeration ----

CriterionResult criterion3(const Context& ctx) {
  CriterionResult r;
  r.name = "enumeration";
  bool ok = true;
  json rows = json::array();
  const std::vector<std::pair<std::uint32_t, int>> cases = {{3, 2}, {3, 3}, {5, 2}, {5, 3}, {5, 4}};
  for (auto [p, c] : cases) {
    const FieldSpec k = FieldSpec::build(p);
    const auto classes = enumerate_ask_classes(k, c);
    const auto counted = count_ask_classes(k, c);
    const int exponent = (c - 1) - (c - 1) / static_cast<int>(p);
    std::uint64_t expected = 1;
    for (int i = 0; i < exponent; ++i) expected *= p;
    const double lower = std::pow(static_cast<double>(p), c / 2.0 - 1.0);
    std::uint64_t iso_pairs = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        if (ask_geom_isomorphic(k, classes[i], classes[j])) ++iso_pairs;
      }
    }
    const bool exact = classes.size() == expected && counted == expected;
    const bool above = static_cast<double>(classes.size()) >= lower * (ctx.injected ? 1e6 : 1.0);
    ok = ok && exact && above && iso_pairs == 0;
    rows.push_back({{"p", p},
                    {"c", c},
                    {"enumerated", classes.size()},
                    {"counted", counted.str()},
                    {"expected", expected},
                    {"lower_bound", lower},
                    {"isomorphic_pairs", iso_pairs}});
  }
  r.detail = {{"cases", rows}};
  r.pass = ok;
  r.summary = std::string("counts ") + yes_no(ok);
  return r;
}

// ---- 4: injectivity ----

CriterionResult criterion4(const Context& ctx) {
  CriterionResult r;
  r.name = "injectivity";
  const auto t0 = std::chrono::steady_clock::now();
  const FieldSpec k = FieldSpec::build(331);
  bool ok = true;
  json parts = json::object();
  for (std::uint64_t chi : {std::uint64_t{0}, std::uint64_t{165}}) {
    const AskClassFamily fam(k, 3, chi);
    const FamilyInjectivityReport rep = injectivity_check_family(fam, ctx.jobs);
    ok = ok && rep.pass && rep.max_ratio < 1.0 - 1e-6;
    parts[chi == 0 ? "trivial_chi" : "quadratic_chi"] = to_json(rep);
  }
  // A trivial-chi member has |K(0)| = 1 and a quadratic-chi member vanishes
  // at 0, so no cross pair is proportional.
  parts["cross_family"] = "separated by the value at 0";
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool time_ok = secs <= 120.0;
  if (ctx.injected) ok = false;
  r.detail = parts;
  r.detail["time_limit_seconds"] = 120;
  r.detail["injected"] = ctx.injected;
  r.pass = ok && time_ok;
  r.summary = std::string("non-proportional ") + yes_no(ok) + ", time " + yes_no(time_ok);
  return r;
}

// ---- 5: spherical code ----

CriterionResult criterion5(const Context& ctx) {
  CriterionResult r;
  r.name = "spherical-code";
  const FieldSpec k = FieldSpec::build(1373);
  const AskClassFamily fam(k, 3, 0);
  const FamilyCodeReport rep =
      code_report_family(fam, 1, ctx.full ? 10000 : 1000, ctx.seed ^ 0x5ULL, ctx.jobs);
  const CodeReport& ch = rep.chain;
  const double bound = ch.cosine_bound * ctx.scale;
  const bool cos_ok = ch.violations == 0 && within_bound(ch.max_cosine, bound) &&
                      rep.sampled_violations == 0 && within_bound(rep.sampled_max_cosine, bound);
  const bool chain_ok = ch.chain_ok && within_bound(ch.max_cosine, ch.chain_bound);
  const bool routes_ok = rep.max_route_discrepancy <= 1e-9;
  r.detail = to_json(rep);
  r.detail["members"] = fam.size();
  r.detail["member_pairs"] = static_cast<double>(fam.size()) * (fam.size() - 1) / 2;
  r.pass = ch.precondition_ok && cos_ok && chain_ok && routes_ok;
  r.summary = "cos <= 6c/sqrt(q) " + yes_no(cos_ok) + ", chain " + yes_no(chain_ok) +
              ", routes agree " + yes_no(routes_ok);
  return r;
}

// ---- 6: KL bound and Hermite roots ----

CriterionResult criterion6(const Context& ctx) {
  CriterionResult r;
  r.name = "kl-bound";
  const KLBound kl8 = kl_polynomial_bound(8, 1.0);
  const std::string exact = kl8.binomial.exact ? kl8.binomial.exact->str() : "";
  const bool exact_ok = exact == (ctx.injected ? "1583" : "1584");

  bool monotone = true;
  bool dominates = true;
  json mono = json::array();
  BigInt prev = 0;
  for (std::uint64_t n : {8, 16, 32, 64, 128}) {
    const KLBound b = kl_polynomial_bound(n, 1.0);
    const BigInt v = b.binomial.exact.value_or(BigInt(0));
    if (v < prev) monotone = false;
    prev = v;
    dominates = dominates && b.gamma_form_dominates;
    mono.push_back({{"n", n}, {"exact", v.str()}, {"gamma_form_dominates", b.gamma_form_dominates}});
  }

  const HermiteRoot h2 = hermite_largest_root(2);
  const HermiteRoot h3 = hermite_largest_root(3);
  const double e2 = std::fabs(static_cast<double>(h2.value) - 1.0 / std::sqrt(2.0));
  const double e3 = std::fabs(static_cast<double>(h3.value) - std::sqrt(1.5));
  const bool roots_ok = e2 <= 1e-12 && e3 <= 1e-12;

  bool range_ok = true;
  bool certified = true;
  int first_bad = 0;
  for (int kk = 2; kk <= 200; ++kk) {
    const HermiteRoot h = hermite_largest_root(kk);
    const long double lo = std::sqrt(static_cast<long double>(kk - 1) / 2.0L);
    const long double hi = std::sqrt(2.0L * kk);
    const bool in = h.value >= lo * (1 - 1e-15L) && h.value <= hi;
    if (!in && range_ok) first_bad = kk;
    range_ok = range_ok && in;
    certified = certified && h.sign_change;
  }
  const HermiteRoot h200 = hermite_largest_root(200);
  const double deficit = (std::sqrt(400.0) - static_cast<double>(h200.value)) * std::pow(400.0, 1.0 / 6.0);

  r.detail = {{"kl_8_1_exact", exact},
              {"kl_8_1_gamma_form_log10", kl8.gamma_form.log10.str(20)},
              {"monotone_in_n", mono},
              {"h2_error", e2},
              {"h3_error", e3},
              {"range_k_le_200", range_ok},
              {"first_out_of_range", first_bad},
              {"sign_change_certified", certified},
              {"scaled_deficit_k200", deficit},
              {"scaled_deficit_limit", 3.3721 / std::cbrt(6.0)},
              {"gamma_form_dominates_on_grid", dominates}};
  r.pass = exact_ok && monotone && roots_ok && range_ok && certified;
  r.summary = "KL(8,1) = " + exact + ", monotone " + yes_no(monotone) + ", roots " +
              yes_no(roots_ok) + ", range " + yes_no(range_ok);
  return r;
}

// ---- 7: bound composition ----

CriterionResult criterion7(const Context& ctx) {
  CriterionResult r;
  r.name = "bound-composition";
  const CountBound lisse = lisse_count_bound(1601, 1601, 1, 1);
  const double ours = static_cast<double>(lisse.value.log10);
  // Independent: long double lgamma.
  const long double exponent = 90.0L + 6.0L * std::sqrt(10.0L) + 3.0L;
  const long double indep =
      exponent * std::log10(3202.0L) - std::lgamma(90.0L) / std::log(10.0L);
  const bool value_ok = std::fabs(ours - 256.3) <= 0.5 &&
                        std::fabs(static_cast<long double>(ours) - indep) <= 1e-9L;

  bool consistent = true;
  json grid = json::array();
  const std::vector<std::uint64_t> qs = {1601, next_prime(12000), next_prime(40500)};
  for (std::uint64_t q : qs) {
    const FieldSpec k = FieldSpec::build(static_cast<std::uint32_t>(q));
    for (int c = 1; c <= 3; ++c) {
      if (static_cast<double>(q) < kLisseConstant * c * c * c) continue;
      const BigInt lower = count_ask_classes(k, c, 0);
      const CountBound b = lisse_count_bound(q, q, c, 1);
      const bool ok = consistency_check(lower, b.value);
      consistent = consistent && ok;
      json row = {{"q", q}, {"c", c}, {"U", q}, {"family", "trivial chi"},
                  {"lower", lower.str()}, {"bound_log10", b.value.log10.str(12)}, {"ok", ok}};
      grid.push_back(row);
      if (c >= 3) {
        const BigInt lq = count_ask_classes(k, c, (q - 1) / 2);
        const CountBound bq = lisse_count_bound(q, q - 1, c, 1);
        const bool okq = consistency_check(lq, bq.value);
        consistent = consistent && okq;
        grid.push_back({{"q", q}, {"c", c}, {"U", q - 1}, {"family", "quadratic chi"},
                        {"lower", lq.str()}, {"bound_log10", bq.value.log10.str(12)},
                        {"ok", okq}});
      }
    }
  }
  json mext = json::array();
  for (auto [q, c] : std::vector<std::pair<std::uint64_t, int>>{
           {1601, 1}, {next_prime(647680), 2}}) {
    const FieldSpec k = FieldSpec::build(static_cast<std::uint32_t>(q));
    BigInt lower = count_ask_classes(k, c, 0);
    if (c >= 3) lower += count_ask_classes(k, c, (q - 1) / 2);
    const CountBound b = mext_count_bound(q, 0, c);
    const bool ok = consistency_check(lower, b.value);
    consistent = consistent && ok;
    mext.push_back({{"q", q}, {"c", c}, {"lower", lower.str()},
                    {"bound_log10", b.value.log10.str(12)}, {"ok", ok}});
  }
  // A lower count above the bound must be caught.
  const BigInt synthetic = pow(BigInt(10), 400);
  const bool caught = !consistency_check(synthetic, lisse.value);
  const bool injected_ok = !ctx.injected || consistency_check(synthetic, lisse.value);

  r.detail = {{"lisse_1601_log10", lisse.value.log10.str(12)},
              {"independent_log10", static_cast<double>(indep)},
              {"target", 256.3},
              {"lisse_grid", grid},
              {"mext_grid", mext},
              {"synthetic_violation_caught", caught}};
  r.pass = value_ok && consistent && caught && injected_ok;
  r.summary = "log10 = " + lisse.value.log10.str(6) + ", consistency " + yes_no(consistent);
  return r;
}

// ---- 8: Fourier layer ----

CriterionResult criterion8(const Context& ctx) {
  CriterionResult r;
  r.name = "fourier";
  const FieldSpec k = FieldSpec::build(101);
  const std::uint64_t q = k.q();
  std::mt19937_64 rng(ctx.seed ^ 0x8ULL);
  std::uniform_int_distribution<std::uint64_t> any(0, q - 1);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, q - 1);
  std::uniform_int_distribution<int> deg_pick(1, 4);
  std::uniform_int_distribution<std::uint64_t> chi_pick(0, q - 2);
  double plancherel = 0;
  double reflection = 0;
  int made = 0;
  while (made < 50) {
    const int deg = deg_pick(rng);
    std::vector<FieldElement> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = k.element(any(rng));
    c[deg] = k.element(nonzero(rng));
    const std::uint64_t m = chi_pick(rng);
    const Poly f2 = Poly::linear_root(k, k.element(any(rng)));
    const AskDescriptor d = make_ask(k, Poly(c), RationalFunction::polynomial(k, f2), k.one(), m);
    const TraceSample s = trace_ask(k, d);
    std::optional<TraceSample> f;
    try {
      f = fourier_transform(s, k.one());
    } catch (const PreconditionError&) {
      continue;  // linear phase with trivial Kummer part
    }
    ++made;
    TraceSample ff = fourier_transform(*f, k.one());
    // Rounding error sits far below any scaled tolerance, so the self-test
    // corrupts one value instead.
    if (ctx.injected && made == 1) ff.values[0] += Complex(1e-3, 0.0);
    double e1 = 0;
    double e2 = 0;
    for (auto v : s.values) e1 += std::norm(v);
    for (auto v : f->values) e2 += std::norm(v);
    plancherel = std::max(plancherel, std::fabs(e1 - e2) / std::max(1.0, e1));
    std::vector<Complex> ext(q, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < s.domain.size(); ++i) ext[s.domain[i].code] = s.values[i];
    for (std::size_t i = 0; i < ff.domain.size(); ++i) {
      const FieldElement y = ff.domain[i];
      reflection = std::max(reflection, std::abs(ff.values[i] - ext[k.neg(y).code]));
    }
  }
  const double tol = 1e-9 * ctx.scale;
  r.detail = {{"samples", made},
              {"max_plancherel_relative_error", plancherel},
              {"max_reflection_error", reflection},
              {"tolerance", tol}};
  r.pass = plancherel <= tol && reflection <= tol;
  r.summary = "Plancherel and reflection " + yes_no(r.pass);
  return r;
}

// ---- 9: trace-norm lab ----

CriterionResult criterion9(const Context& ctx) {
  CriterionResult r;
  r.name = "trace-norm";
  const std::uint64_t tail_trials = ctx.full ? 10000 : 1000;
  const FieldSpec k101 = FieldSpec::build(101);
  const auto rad = RandomFunctionSpec::rademacher(ctx.seed ^ 0x9ULL);

  // (a)
  const TraceSample k_x2 = trace_ask(k101, make_ask(k101, Poly::monomial(k101.one(), 2)));
  const TraceSample k_one = trace_ask(k101, make_ask(k101, Poly()));
  json tails = json::array();
  bool tails_ok = k_x2.conductor == 3 && k_one.conductor == 1;
  for (const auto& [kernel, alpha] :
       std::vector<std::pair<const TraceSample*, double>>{{&k_x2, 1.0}, {&k_x2, 0.1}, {&k_one, 1.0}}) {
    TailExperiment t = tail_experiment(*kernel, rad, alpha, 2.0, tail_trials, ctx.jobs);
    t.bound *= ctx.scale;
    t.standard_error = std::sqrt(t.bound * (1 - t.bound) / static_cast<double>(t.trials));
    t.within = within_bound(t.frequency, t.bound + 3 * t.standard_error);
    tails_ok = tails_ok && t.within;
    tails.push_back(to_json(t));
  }

  // (b)
  json norms = json::array();
  bool norms_ok = true;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> runs = {{101, ctx.full ? 1000u : 200u}};
  runs.push_back({499, ctx.full ? 1000u : 50u});
  for (auto [p, trials] : runs) {
    const FieldSpec k = FieldSpec::build(p);
    const KernelFamily fam = KernelFamily::standard(k, 3);
    RandomNormOptions opt;
    opt.trials = trials;
    opt.jobs = ctx.jobs;
    const RandomNormReport rep = random_norm_experiment(fam, rad, opt);
    norms_ok = norms_ok && rep.smallest_alpha.has_value() && *rep.smallest_alpha <= 8 &&
               rep.consistent;
    norms.push_back(to_json(rep));
  }

  // (c)
  bool trivial_ok = true;
  for (std::uint32_t p : {101u, 499u}) {
    const FieldSpec k = FieldSpec::build(p);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto phi = sample_random_function(rad, k, s);
      trivial_ok = trivial_ok && trivial_norm_upper(phi) == std::sqrt(static_cast<double>(p));
    }
  }

  // Supplementary: concentration of the energy and L1 mass.
  json conc = json::array();
  conc.push_back(to_json(concentration_experiment(rad, k101, 0.5, std::nullopt, tail_trials / 10, ctx.jobs)));
  conc.push_back(to_json(concentration_experiment(RandomFunctionSpec::uniform_circle(ctx.seed),
                                                  k101, std::nullopt, 0.5, tail_trials / 10,
                                                  ctx.jobs)));
  conc.push_back(to_json(concentration_experiment(
      RandomFunctionSpec::table({{Complex(0.5, 0), 0.5}, {Complex(-0.5, 0), 0.5}}, ctx.seed),
      FieldSpec::build(499), std::nullopt, std::nullopt, tail_trials / 10, ctx.jobs)));

  r.detail = {{"tail", tails},
              {"random_norm", norms},
              {"trivial_upper_equals_sqrt_q", trivial_ok},
              {"concentration", conc},
              {"log", "natural"}};
  r.pass = tails_ok && norms_ok && trivial_ok;
  r.summary = "tails " + yes_no(tails_ok) + ", certified >= 99% " + yes_no(norms_ok) +
              ", trivial bound " + yes_no(trivial_ok);
  return r;
}

// ---- 10: determinism ----

CriterionResult criterion10(const VerifyOptions& options) {
  CriterionResult r;
  r.name = "determinism";
  VerifyOptions inner;
  inner.profile = "quick";
  inner.seed = options.seed;
  inner.jobs = options.jobs;
  inner.only = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  const std::string a = strip_wall_clock(to_json(verify_all(inner))).dump();
  const std::string b = strip_wall_clock(to_json(verify_all(inner))).dump();
  const bool same = a == b && options.inject_violation != 10;
  r.detail = {{"bytes", a.size()}, {"identical", a == b}};
  r.pass = same;
  r.summary = "two quick runs " + std::string(same ? "identical" : "DIFFER");
  return r;
}

}  // namespace

CriterionResult verify_criterion(int id, const VerifyOptions& options) {
  require(options.profile == "quick" || options.profile == "full",
          "verify: profile must be quick or full");
  Context ctx;
  ctx.full = options.profile == "full";
  ctx.seed = options.seed;
  ctx.jobs = options.jobs;
  ctx.injected = options.inject_violation == id;
  ctx.scale = ctx.injected ? kInjectedScale : 1.0;
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = criterion1(ctx); break;
    case 2: r = criterion2(ctx); break;
    case 3: r = criterion3(ctx); break;
    case 4: r = criterion4(ctx); break;
    case 5: r = criterion5(ctx); break;
    case 6: r = criterion6(ctx); break;
    case 7: r = criterion7(ctx); break;
    case 8: r = criterion8(ctx); break;
    case 9: r = criterion9(ctx); break;
    case 10: r = criterion10(options); break;
    default:
      throw PreconditionError("verify: unknown criterion " + std::to_string(id));
  }
  r.id = id;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ctx.injected) r.detail["injected_violation"] = true;
  return r;
}

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyReport rep;
  rep.profile = options.profile;
  rep.seed = options.seed;
  std::vector<int> ids = options.only;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  rep.pass = true;
  for (int id : ids) {
    rep.criteria.push_back(verify_criterion(id, options));
    rep.pass = rep.pass && rep.criteria.back().pass;
  }
  return rep;
}

json to_json(const VerifyReport& r) {
  json criteria = json::array();
  double total = 0;
  for (const auto& c : r.criteria) {
    criteria.push_back({{"id", c.id},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"summary", c.summary},
                        {"wall_seconds", c.wall_seconds},
                        {"detail", c.detail}});
    total += c.wall_seconds;
  }
  return {{"version", kVersion},
          {"profile", r.profile},
          {"seed", r.seed},
          {"criteria", criteria},
          {"pass", r.pass},
          {"wall_seconds", total}};
}

json strip_wall_clock(json j) {
  if (j.is_object()) {
    for (const char* key : {"wall_seconds", "started_at", "finished_at"}) j.erase(key);
    for (auto it = j.begin(); it != j.end(); ++it) *it = strip_wall_clock(*it);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_wall_clock(value);
  }
  return j;
}

}  // namespace tracecodes
