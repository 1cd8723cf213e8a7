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

#include "tracecodes/trace_norm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "tracecodes/errors.hpp"
#include "tracecodes/orthogonality.hpp"
#include "tracecodes/parallel.hpp"

namespace tracecodes {

namespace {

constexpr double kTableTolerance = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double total_weight(const std::vector<Atom>& atoms) {
  double w = 0;
  for (const auto& a : atoms) w += a.weight;
  return w;
}

double log_q(std::uint64_t q) { return std::log(static_cast<double>(q)); }

}  // namespace

RandomFunctionSpec RandomFunctionSpec::rademacher(std::uint64_t seed) {
  RandomFunctionSpec r;
  r.distribution = Distribution::kRademacher;
  r.seed = seed;
  return r;
}

RandomFunctionSpec RandomFunctionSpec::uniform_circle(std::uint64_t seed) {
  RandomFunctionSpec r;
  r.distribution = Distribution::kUniformCircle;
  r.seed = seed;
  return r;
}

RandomFunctionSpec RandomFunctionSpec::table(std::vector<Atom> atoms, std::uint64_t seed) {
  RandomFunctionSpec r;
  r.distribution = Distribution::kTable;
  r.seed = seed;
  r.atoms = std::move(atoms);
  r.validate();
  return r;
}

void RandomFunctionSpec::validate() const {
  if (distribution != Distribution::kTable) return;
  require(!atoms.empty(), "random function: empty atom table");
  Complex mean = 0;
  for (const auto& a : atoms) {
    require(std::isfinite(a.weight) && a.weight >= 0, "random function: negative weight");
    require(std::abs(a.value) <= 1 + kTableTolerance, "random function: atom outside the unit disc");
    mean += a.weight * a.value;
  }
  const double w = total_weight(atoms);
  require(w > 0, "random function: total weight must be positive");
  require(std::abs(mean / w) <= kTableTolerance, "random function: atom table must have mean 0");
}

double RandomFunctionSpec::second_moment() const {
  if (distribution != Distribution::kTable) return 1.0;
  double m = 0;
  for (const auto& a : atoms) m += a.weight * std::norm(a.value);
  return m / total_weight(atoms);
}

double RandomFunctionSpec::first_absolute_moment() const {
  if (distribution != Distribution::kTable) return 1.0;
  double m = 0;
  for (const auto& a : atoms) m += a.weight * std::abs(a.value);
  return m / total_weight(atoms);
}

std::string RandomFunctionSpec::name() const {
  switch (distribution) {
    case Distribution::kRademacher:
      return "rademacher";
    case Distribution::kUniformCircle:
      return "uniform-circle";
    case Distribution::kTable:
      return "table";
  }
  return "table";
}

std::vector<Complex> sample_random_function(const RandomFunctionSpec& rspec,
                                            const FieldSpec& k, std::uint64_t stream) {
  rspec.validate();
  auto rng = stream_engine(rspec.seed, stream);
  std::vector<Complex> out(k.q());
  switch (rspec.distribution) {
    case RandomFunctionSpec::Distribution::kRademacher:
      for (auto& v : out) v = (rng() >> 63) ? -1.0 : 1.0;
      break;
    case RandomFunctionSpec::Distribution::kUniformCircle:
      for (auto& v : out) v = std::polar(1.0, 2 * std::numbers::pi * unit_interval(rng));
      break;
    case RandomFunctionSpec::Distribution::kTable: {
      std::vector<double> cumulative;
      double acc = 0;
      for (const auto& a : rspec.atoms) cumulative.push_back(acc += a.weight);
      for (auto& v : out) {
        const double u = unit_interval(rng) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        v = rspec.atoms[static_cast<std::size_t>(it - cumulative.begin())].value;
      }
      break;
    }
  }
  return out;
}

double trivial_norm_upper(const std::vector<Complex>& phi) {
  if (phi.empty()) return 0;
  double l1 = 0;
  for (auto v : phi) l1 += std::abs(v);
  const double q = static_cast<double>(phi.size());
  return std::sqrt(q) * (l1 / q);
}

double implied_norm_bound(double A, double gamma_exp, std::uint64_t q) {
  return std::pow(static_cast<double>(q), gamma_exp) / (A * A);
}

NormCertificate evaluate_certificate(const PhiStatistics& stats, double A, double gamma_exp,
                                     double s) {
  require(A > 0, "certificate: A must be positive");
  NormCertificate c;
  const double q = static_cast<double>(stats.q);
  c.q = stats.q;
  c.A = A;
  c.gamma_exp = gamma_exp;
  c.s = s;
  c.sup = stats.sup;
  c.sup_limit = A * std::pow(q, 0.5 - gamma_exp);
  c.sup_ok = within_bound(c.sup, c.sup_limit);
  c.max_correlation = stats.max_correlation;
  c.correlation_limit = A * std::pow(q, 1.0 - gamma_exp);
  c.correlation_ok = within_bound(c.max_correlation, c.correlation_limit);
  c.argmax_kernel = stats.argmax_kernel;
  c.argmax_conductor = stats.argmax_conductor;
  c.kernels_tested = stats.kernels;
  c.energy = stats.energy;
  c.energy_limit = q / A;
  c.energy_ok = within_bound(c.energy_limit, c.energy);
  c.implied_bound = implied_norm_bound(A, gamma_exp, stats.q);
  c.certified = c.sup_ok && c.correlation_ok && c.energy_ok;
  return c;
}

namespace {

void fill_pointwise(const std::vector<Complex>& phi, PhiStatistics& st) {
  for (auto v : phi) {
    st.sup = std::max(st.sup, std::abs(v));
    st.energy += std::norm(v);
  }
}

nlohmann::json sample_manifest(const std::vector<TraceSample>& family) {
  std::map<std::string, std::uint64_t> kinds;
  int max_cond = 0;
  for (const auto& s : family) {
    ++kinds[s.descriptor ? kind_name(*s.descriptor) : "numeric"];
    max_cond = std::max(max_cond, s.conductor.value_or(0));
  }
  return {{"kernels", family.size()},
          {"kinds", kinds},
          {"max_conductor", max_cond},
          {"extension", "by zero off each domain"},
          {"coverage", "finite explicit family; the all-sheaves hypothesis is assumed"}};
}

}  // namespace

PhiStatistics phi_statistics(const std::vector<Complex>& phi,
                             const std::vector<TraceSample>& family, double s) {
  require(!family.empty(), "certificate: empty family");
  const FieldSpec& k = family.front().spec;
  require(phi.size() == k.q(), "certificate: function table must have q entries");
  PhiStatistics st;
  st.q = k.q();
  st.kernels = family.size();
  fill_pointwise(phi, st);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const TraceSample& K = family[i];
    require(K.spec == k, "certificate: family samples must share the field");
    require(K.conductor.has_value(), "certificate: every kernel needs a conductor");
    Complex sum = 0;
    for (std::size_t j = 0; j < K.domain.size(); ++j) sum += K.values[j] * phi[K.domain[j].code];
    const double ratio = std::abs(sum) / std::pow(static_cast<double>(*K.conductor), s);
    if (ratio > st.max_correlation || i == 0) {
      st.max_correlation = ratio;
      st.argmax_kernel = "#" + std::to_string(i);
      st.argmax_conductor = *K.conductor;
    }
  }
  return st;
}

PhiStatistics phi_statistics(const std::vector<Complex>& phi, const KernelFamily& family,
                             double s) {
  require(family.size() > 0, "certificate: empty family");
  require(phi.size() == family.field().q(), "certificate: function table must have q entries");
  PhiStatistics st;
  st.q = family.field().q();
  fill_pointwise(phi, st);
  const CorrelationSummary c = family.correlate(phi, s);
  st.max_correlation = c.max_ratio;
  st.argmax_kernel = c.argmax_orbit + "#" + std::to_string(c.argmax_param);
  st.argmax_conductor = c.argmax_conductor;
  st.kernels = c.kernels;
  return st;
}

NormCertificate certificate_check(const std::vector<Complex>& phi,
                                  const std::vector<TraceSample>& family, double A,
                                  double gamma_exp, double s) {
  NormCertificate c = evaluate_certificate(phi_statistics(phi, family, s), A, gamma_exp, s);
  c.family = sample_manifest(family);
  return c;
}

NormCertificate certificate_check(const std::vector<Complex>& phi, const KernelFamily& family,
                                  double A, double gamma_exp, double s) {
  NormCertificate c = evaluate_certificate(phi_statistics(phi, family, s), A, gamma_exp, s);
  c.family = family.manifest();
  return c;
}

TailExperiment tail_experiment(const TraceSample& kernel, const RandomFunctionSpec& rspec,
                               double alpha, double s, std::uint64_t trials, unsigned jobs) {
  require(s >= 2, "tail_experiment: requires s >= 2");
  require(alpha > 0, "tail_experiment: requires alpha > 0");
  require(trials >= 1, "tail_experiment: requires at least one trial");
  require(kernel.conductor.has_value(), "tail_experiment: kernel needs a conductor");
  const FieldSpec& k = kernel.spec;
  TailExperiment t;
  t.descriptor_id = kernel.descriptor_id;
  t.conductor = *kernel.conductor;
  t.q = k.q();
  t.alpha = alpha;
  t.s = s;
  t.trials = trials;
  const double q = static_cast<double>(t.q);
  const double cond = static_cast<double>(t.conductor);
  t.threshold = alpha * std::pow(cond, s) * std::sqrt(q * log_q(t.q));
  t.bound = std::min(1.0, 8.0 * std::exp(-0.5 * alpha * alpha * std::pow(cond, 2 * s - 2) *
                                          log_q(t.q)));
  std::vector<char> hit(trials, 0);
  parallel_for(trials, jobs, [&](std::size_t i) {
    const auto phi = sample_random_function(rspec, k, i);
    Complex sum = 0;
    for (std::size_t j = 0; j < kernel.domain.size(); ++j) {
      sum += kernel.values[j] * phi[kernel.domain[j].code];
    }
    hit[i] = std::abs(sum) >= t.threshold;
  });
  for (char h : hit) t.exceedances += h ? 1 : 0;
  t.frequency = static_cast<double>(t.exceedances) / static_cast<double>(trials);
  t.standard_error = std::sqrt(t.bound * (1 - t.bound) / static_cast<double>(trials));
  t.within = within_bound(t.frequency, t.bound + 3 * t.standard_error);
  return t;
}

ConcentrationReport concentration_experiment(const RandomFunctionSpec& rspec,
                                             const FieldSpec& k,
                                             std::optional<double> nu1,
                                             std::optional<double> nu2,
                                             std::uint64_t trials, unsigned jobs) {
  require(trials >= 1, "concentration_experiment: requires at least one trial");
  rspec.validate();
  ConcentrationReport r;
  r.q = k.q();
  r.trials = trials;
  r.nu1 = nu1.value_or(rspec.second_moment() / 2);
  r.nu2 = nu2.value_or(rspec.first_absolute_moment() / 2);
  const double q = static_cast<double>(r.q);
  std::vector<char> energy_hit(trials, 0);
  std::vector<char> l1_hit(trials, 0);
  parallel_for(trials, jobs, [&](std::size_t i) {
    const auto phi = sample_random_function(rspec, k, i);
    double energy = 0;
    double l1 = 0;
    for (auto v : phi) {
      energy += std::norm(v);
      l1 += std::abs(v);
    }
    energy_hit[i] = within_bound(r.nu1 * q, energy);
    l1_hit[i] = within_bound(r.nu2 * q, l1);
  });
  std::uint64_t e = 0;
  std::uint64_t l = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    e += energy_hit[i] ? 1 : 0;
    l += l1_hit[i] ? 1 : 0;
  }
  r.energy_frequency = static_cast<double>(e) / static_cast<double>(trials);
  r.l1_frequency = static_cast<double>(l) / static_cast<double>(trials);
  r.required = 1.0 - 10.0 / static_cast<double>(trials);
  r.checked = r.q >= 101;
  r.pass = !r.checked || (r.energy_frequency >= r.required && r.l1_frequency >= r.required);
  return r;
}

RandomNormReport random_norm_experiment(const KernelFamily& family,
                                        const RandomFunctionSpec& rspec,
                                        const RandomNormOptions& options) {
  require(options.trials >= 1, "random_norm_experiment: requires at least one trial");
  require(!options.alphas.empty(), "random_norm_experiment: empty alpha sweep");
  rspec.validate();
  const FieldSpec& k = family.field();
  RandomNormReport r;
  r.q = k.q();
  r.trials = options.trials;
  r.distribution = rspec.name();
  r.seed = rspec.seed;
  r.gamma_exp = options.gamma_exp;
  r.s = options.s;
  r.family = family.manifest();

  std::vector<PhiStatistics> stats(options.trials);
  std::vector<double> trivial(options.trials);
  parallel_for(options.trials, options.jobs, [&](std::size_t i) {
    const auto phi = sample_random_function(rspec, k, i);
    stats[i] = phi_statistics(phi, family, options.s);
    trivial[i] = trivial_norm_upper(phi);
  });

  r.min_trivial_upper = *std::min_element(trivial.begin(), trivial.end());
  const double root_log = std::sqrt(log_q(r.q));
  for (double alpha : options.alphas) {
    AlphaRow row;
    row.alpha = alpha;
    row.A = alpha * root_log;
    row.implied_bound = implied_norm_bound(row.A, options.gamma_exp, r.q);
    for (std::uint64_t i = 0; i < options.trials; ++i) {
      const NormCertificate c = evaluate_certificate(stats[i], row.A, options.gamma_exp,
                                                     options.s);
      if (!c.certified) continue;
      ++row.certified;
      if (!within_bound(c.implied_bound, trivial[i])) r.consistent = false;
    }
    row.fraction = static_cast<double>(row.certified) / static_cast<double>(options.trials);
    if (!r.smallest_alpha && row.fraction >= options.target_fraction) r.smallest_alpha = alpha;
    r.rows.push_back(row);
  }
  return r;
}

nlohmann::json to_json(const RandomFunctionSpec& r) {
  nlohmann::json j = {{"distribution", r.name()}, {"seed", r.seed}};
  if (r.distribution == RandomFunctionSpec::Distribution::kTable) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : r.atoms) {
      atoms.push_back({{"re", a.value.real()}, {"im", a.value.imag()}, {"weight", a.weight}});
    }
    j["atoms"] = atoms;
  }
  return j;
}

RandomFunctionSpec random_function_spec_from_json(const nlohmann::json& j) {
  const std::string dist = j.at("distribution").get<std::string>();
  const std::uint64_t seed = j.value("seed", std::uint64_t{0});
  if (dist == "rademacher") return RandomFunctionSpec::rademacher(seed);
  if (dist == "uniform-circle") return RandomFunctionSpec::uniform_circle(seed);
  if (dist == "table") {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
      atoms.push_back({Complex(a.at("re").get<double>(), a.value("im", 0.0)),
                       a.at("weight").get<double>()});
    }
    return RandomFunctionSpec::table(std::move(atoms), seed);
  }
  throw FormatError("unknown distribution: " + dist);
}

nlohmann::json to_json(const NormCertificate& c) {
  return {{"q", c.q},
          {"A", c.A},
          {"gamma", c.gamma_exp},
          {"s", c.s},
          {"sup", {{"value", c.sup}, {"limit", c.sup_limit}, {"ok", c.sup_ok}}},
          {"correlation",
           {{"max_ratio", c.max_correlation},
            {"limit", c.correlation_limit},
            {"argmax_kernel", c.argmax_kernel},
            {"argmax_conductor", c.argmax_conductor},
            {"kernels_tested", c.kernels_tested},
            {"ok", c.correlation_ok}}},
          {"energy", {{"value", c.energy}, {"limit", c.energy_limit}, {"ok", c.energy_ok}}},
          {"implied_lower_bound", c.implied_bound},
          {"certified", c.certified},
          {"status", c.status},
          {"log", "natural"},
          {"family", c.family}};
}

nlohmann::json to_json(const TailExperiment& t) {
  return {{"descriptor_id", t.descriptor_id},
          {"conductor", t.conductor},
          {"q", t.q},
          {"alpha", t.alpha},
          {"s", t.s},
          {"trials", t.trials},
          {"threshold", t.threshold},
          {"exceedances", t.exceedances},
          {"frequency", t.frequency},
          {"bound", t.bound},
          {"standard_error", t.standard_error},
          {"within", t.within},
          {"log", "natural"}};
}

nlohmann::json to_json(const ConcentrationReport& c) {
  return {{"q", c.q},
          {"trials", c.trials},
          {"nu1", c.nu1},
          {"nu2", c.nu2},
          {"energy_frequency", c.energy_frequency},
          {"l1_frequency", c.l1_frequency},
          {"required", c.required},
          {"checked", c.checked},
          {"pass", c.pass}};
}

nlohmann::json to_json(const RandomNormReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"alpha", row.alpha},
                    {"A", row.A},
                    {"certified", row.certified},
                    {"fraction", row.fraction},
                    {"implied_lower_bound", row.implied_bound}});
  }
  return {{"q", r.q},
          {"trials", r.trials},
          {"distribution", r.distribution},
          {"seed", r.seed},
          {"gamma", r.gamma_exp},
          {"s", r.s},
          {"rows", rows},
          {"smallest_alpha",
           r.smallest_alpha ? nlohmann::json(*r.smallest_alpha) : nlohmann::json(nullptr)},
          {"min_trivial_upper", r.min_trivial_upper},
          {"consistent", r.consistent},
          {"status", r.status},
          {"log", "natural"},
          {"family", r.family}};
}

}  // namespace tracecodes
