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

#include "commands.hpp"

#include <chrono>
#include <climits>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tracecodes/errors.hpp"
#include "tracecodes/io.hpp"
#include "tracecodes/kernel_family.hpp"
#include "tracecodes/orthogonality.hpp"
#include "tracecodes/spherical_bounds.hpp"
#include "tracecodes/trace_norm.hpp"
#include "tracecodes/verify.hpp"
#include "tracecodes/version.hpp"

namespace tracecodes::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultEnumerateLimit = 1000;
constexpr std::uint64_t kDefaultCodeSamples = 10000;
constexpr std::size_t kMaxExplicitCosineFamily = 4000;

// --p/--n, or --q as a prime power.
FieldSpec field_of(const ExperimentConfig& c) {
  if (c.p) {
    FieldSpec k = FieldSpec::build(*c.p, c.n, c.modulus);
    require(!c.bound_q || *c.bound_q == k.q(), "--q disagrees with --p and --n");
    return k;
  }
  require(c.bound_q.has_value(), "missing --p or --q");
  const std::uint64_t q = *c.bound_q;
  const auto primes = prime_divisors(q);
  require(primes.size() == 1, "--q must be a prime power");
  std::uint32_t n = 0;
  for (std::uint64_t m = q; m > 1; m /= primes[0]) ++n;
  require(primes[0] <= FieldSpec::kMaxPrime, "--q: characteristic too large");
  return FieldSpec::build(static_cast<std::uint32_t>(primes[0]), n, c.modulus);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

const json& input(const ExperimentConfig& c, const char* key) {
  if (!c.inputs.contains(key)) throw PreconditionError(std::string("missing input: ") + key);
  return c.inputs.at(key);
}

// Coefficient lists on the command line are element codes, constant term first.
Poly poly_input(const FieldSpec& k, const ExperimentConfig& c, const char* key, Poly fallback) {
  if (!c.inputs.contains(key)) return fallback;
  std::vector<FieldElement> coeffs;
  for (const auto& v : c.inputs.at(key)) {
    const auto code = v.get<std::uint64_t>();
    require(code < k.q(), std::string(key) + ": coefficient out of range");
    coeffs.push_back(k.element(code));
  }
  return Poly(std::move(coeffs));
}

// An element given by its coefficients over F_p, constant term first.
FieldElement element_input(const FieldSpec& k, const ExperimentConfig& c, const char* key,
                           FieldElement fallback) {
  if (!c.inputs.contains(key)) return fallback;
  std::vector<std::uint32_t> coeffs;
  const json& v = c.inputs.at(key);
  if (v.is_array()) {
    coeffs = v.get<std::vector<std::uint32_t>>();
  } else {
    coeffs.push_back(v.get<std::uint32_t>());
  }
  require(coeffs.size() <= k.n(), std::string(key) + ": too many coefficients");
  for (auto x : coeffs) require(x < k.p(), std::string(key) + ": coefficient out of range");
  coeffs.resize(k.n(), 0);
  return k.from_coeffs(coeffs);
}

AskDescriptor ask_from_inputs(const FieldSpec& k, const ExperimentConfig& c) {
  const Poly f1 = poly_input(k, c, "f1", Poly());
  const Poly num = poly_input(k, c, "f2_num", Poly::constant(k.one()));
  const Poly den = poly_input(k, c, "f2_den", Poly::constant(k.one()));
  return make_ask(k, f1, RationalFunction(k, num, den), element_input(k, c, "psi", k.one()),
                  c.chi);
}

std::string sample_csv(const TraceSample& s) {
  std::ostringstream out;
  write_sample_csv(out, s);
  return out.str();
}

// A samples file: {"field", "samples": [...]} or {"field", "descriptors": [...]}.
std::vector<TraceSample> samples_from_file(const std::string& path) {
  const json j = read_json_file(path);
  if (j.is_array()) {
    std::vector<TraceSample> out;
    for (const auto& s : j) out.push_back(sample_from_json(s));
    return out;
  }
  const FieldSpec k = field_from_json(j.at("field"));
  std::vector<TraceSample> out;
  if (j.contains("samples")) {
    for (auto s : j["samples"]) {
      if (!s.contains("field")) s["field"] = j["field"];
      out.push_back(sample_from_json(s));
    }
  }
  if (j.contains("descriptors")) {
    for (const auto& d : j["descriptors"]) out.push_back(make_sample(k, descriptor_from_json(k, d)));
  }
  require(!out.empty(), path + ": no samples");
  return out;
}

// A kernel file: a sample, a report embedding one, or {"field", "descriptor"}.
TraceSample kernel_from_file(const std::string& path) {
  json j = read_json_file(path);
  if (j.contains("sample")) j = j["sample"];
  if (j.contains("values")) return sample_from_json(j);
  const FieldSpec k = field_from_json(j.at("field"));
  return make_sample(k, descriptor_from_json(k, j.at("descriptor")));
}

RandomFunctionSpec random_spec(const ExperimentConfig& c) {
  json j = {{"distribution", c.distribution}, {"seed", c.seed}};
  if (c.inputs.contains("atoms")) {
    const json& a = c.inputs["atoms"];
    j["atoms"] = a.is_string() ? read_json_file(a.get<std::string>()) : a;
  }
  return random_function_spec_from_json(j);
}

// ---- commands ----

Outcome bound_kl(const ExperimentConfig& c) {
  require(c.bound_n.has_value(), "missing --n");
  Outcome o;
  if (c.inputs.contains("cosphi")) {
    require(*c.bound_n <= static_cast<std::uint64_t>(INT_MAX), "--n too large");
    o.report = to_json(kl_cardinality_bound(static_cast<int>(*c.bound_n),
                                            c.inputs["cosphi"].get<double>()));
    return o;
  }
  const KLBound b = kl_polynomial_bound(*c.bound_n, c.gamma.value_or(1.0));
  o.report = to_json(b.binomial);
  o.report["gamma_form"] = to_json(b.gamma_form);
  o.report["gamma_form_dominates"] = b.gamma_form_dominates;
  return o;
}

Outcome bound_count(const ExperimentConfig& c) {
  const std::uint64_t q = c.bound_q.value_or(c.p.value_or(0));
  require(q >= 2, "missing --q");
  Outcome o;
  CountBound b;
  if (c.inputs.value("mext", false)) {
    b = mext_count_bound(q, c.genus_g, c.c, c.raw);
  } else {
    const std::uint64_t u = c.inputs.value("U", q);
    b = lisse_count_bound(q, u, c.c, c.r, c.constant, c.raw);
  }
  o.report = to_json(b.value);
  o.report["theorem_regime"] = b.theorem_regime;
  o.report["kl"] = to_json(b.params);
  return o;
}

Outcome family_ask(const ExperimentConfig& c) {
  const FieldSpec k = field_of(c);
  const AskDescriptor d = ask_from_inputs(k, c);
  const TraceSample s = trace_ask(k, d);
  Outcome o;
  o.report = {{"descriptor", to_json(k, SheafDescriptor{d})},
              {"conductor", to_json(k, conductor_ask(k, d))},
              {"sample", to_json(s)}};
  o.csv = sample_csv(s);
  return o;
}

Outcome family_supermorse(const ExperimentConfig& c) {
  const FieldSpec k = field_of(c);
  const Poly f = poly_input(k, c, "f", Poly());
  const SupermorseCheck check = check_supermorse(k, f);
  require(check.ok, "not supermorse: " + check.reason);
  const TraceSample s = trace_supermorse(k, f);
  json z = json::array();
  json sv = json::array();
  for (auto x : check.z_rational) z.push_back(to_json(k, x));
  for (auto x : check.s_rational) sv.push_back(to_json(k, x));
  Outcome o;
  o.report = {{"descriptor", to_json(k, SheafDescriptor{SupermorseDescriptor{f}})},
              {"critical_points_over_closure", check.z_count},
              {"critical_points_rational", z},
              {"critical_values_rational", sv},
              {"conductor", to_json(k, conductor_supermorse(k, f))},
              {"sample", to_json(s)}};
  o.csv = sample_csv(s);
  return o;
}

Outcome family_fourier(const ExperimentConfig& c) {
  const TraceSample inner = [&] {
    if (c.inputs.contains("input")) return kernel_from_file(c.inputs["input"].get<std::string>());
    const FieldSpec k = field_of(c);
    return trace_ask(k, ask_from_inputs(k, c));
  }();
  const FieldSpec& k = inner.spec;
  const FieldElement psi = element_input(k, c, "transform_psi", k.one());
  const TraceSample out = fourier_transform(inner, psi);
  double e_in = 0;
  double e_out = 0;
  for (auto v : inner.values) e_in += std::norm(v);
  for (auto v : out.values) e_out += std::norm(v);
  Outcome o;
  o.report = {{"input_descriptor_id", inner.descriptor_id},
              {"energy_in", e_in},
              {"energy_out", e_out},
              {"sample", to_json(out)}};
  o.csv = sample_csv(out);
  return o;
}

Outcome gram(const ExperimentConfig& c) {
  Outcome o;
  if (c.inputs.contains("input")) {
    const auto samples = samples_from_file(c.inputs["input"].get<std::string>());
    GramOptions opt;
    opt.force = c.inputs.value("force", false);
    opt.jobs = c.jobs;
    const GramReport rep = verify_gram(samples, default_iso_oracle(), opt);
    o.report = to_json(rep);
    o.pass = rep.violations == 0;
    std::ostringstream csv;
    write_csv_row(csv, {"i", "j", "re", "im", "abs", "bound", "isomorphic", "pass"});
    for (const auto& p : rep.pairs) {
      write_csv_row(csv, {std::to_string(p.i), std::to_string(p.j), format_double(p.value.real()),
                          format_double(p.value.imag()), format_double(std::abs(p.value)),
                          format_double(p.bound), p.isomorphic ? "1" : "0", p.pass ? "1" : "0"});
    }
    o.csv = csv.str();
    return o;
  }
  const FieldSpec k = field_of(c);
  const FamilyGramReport rep = verify_gram_family(AskClassFamily(k, c.c, c.chi), c.jobs);
  o.report = to_json(rep);
  o.pass = rep.pass;
  return o;
}

Outcome code(const ExperimentConfig& c) {
  Outcome o;
  if (c.inputs.contains("input")) {
    const auto samples = samples_from_file(c.inputs["input"].get<std::string>());
    const CodeReport rep = code_report(samples, c.c, c.r, default_iso_oracle());
    o.report = to_json(rep);
    o.pass = rep.pass;
    std::ostringstream csv;
    write_cosine_csv(csv, embed(samples));
    o.csv = csv.str();
    return o;
  }
  const FieldSpec k = field_of(c);
  const AskClassFamily fam(k, c.c, c.chi);
  const FamilyCodeReport rep = code_report_family(
      fam, c.r, c.inputs.value("samples", kDefaultCodeSamples), c.seed, c.jobs);
  o.report = to_json(rep);
  o.pass = rep.chain.pass;
  if (fam.size() <= kMaxExplicitCosineFamily) {
    std::vector<TraceSample> samples;
    for (std::uint64_t i = 0; i < fam.size(); ++i) samples.push_back(trace_ask(k, fam.at(i)));
    std::ostringstream csv;
    write_cosine_csv(csv, embed(samples));
    o.csv = csv.str();
  }
  return o;
}

Outcome enumerate(const ExperimentConfig& c) {
  const FieldSpec k = field_of(c);
  const BigInt count = count_ask_classes(k, c.c, c.chi);
  const std::uint64_t limit = c.inputs.value("limit", kDefaultEnumerateLimit);
  Outcome o;
  o.report = {{"q", k.q()}, {"c", c.c}, {"chi", c.chi}, {"count", count.str()}};
  if (count > limit) {
    o.report["listed"] = false;
    return o;
  }
  const AskClassFamily fam(k, c.c, c.chi);
  json classes = json::array();
  std::ostringstream csv;
  std::vector<std::string> header = {"index", "j", "conductor"};
  for (int i = 1; i <= fam.f1_terms(); ++i) header.push_back("a" + std::to_string(i));
  write_csv_row(csv, header);
  for (std::uint64_t i = 0; i < fam.size(); ++i) {
    classes.push_back({{"descriptor", to_json(k, SheafDescriptor{fam.at(i)})},
                       {"conductor", fam.conductor_at(i)}});
    std::vector<std::string> row = {std::to_string(i), std::to_string(fam.kummer_exponent(i)),
                                    std::to_string(fam.conductor_at(i))};
    for (auto a : fam.f1_coeffs(i)) row.push_back(std::to_string(a.code));
    write_csv_row(csv, row);
  }
  o.report["listed"] = true;
  o.report["classes"] = classes;
  o.csv = csv.str();
  return o;
}

Outcome inject(const ExperimentConfig& c) {
  const FieldSpec k = field_of(c);
  const FamilyInjectivityReport rep =
      injectivity_check_family(AskClassFamily(k, c.c, c.chi), c.jobs);
  Outcome o;
  o.report = to_json(rep);
  o.pass = rep.pass;
  return o;
}

Outcome norm_random(const ExperimentConfig& c) {
  const FieldSpec k = field_of(c);
  const KernelFamily fam = KernelFamily::standard(k, c.c);
  RandomNormOptions opt;
  opt.trials = c.trials;
  opt.jobs = c.jobs;
  opt.s = c.s.value_or(6.0);
  opt.gamma_exp = c.gamma.value_or(0.5);
  if (c.inputs.contains("alphas")) opt.alphas = c.inputs["alphas"].get<std::vector<double>>();
  const RandomNormReport rep = random_norm_experiment(fam, random_spec(c), opt);
  Outcome o;
  o.report = to_json(rep);
  o.pass = rep.consistent;
  std::ostringstream csv;
  write_csv_row(csv, {"alpha", "A", "certified", "fraction", "implied_lower_bound"});
  for (const auto& row : rep.rows) {
    write_csv_row(csv, {format_double(row.alpha), format_double(row.A),
                        std::to_string(row.certified), format_double(row.fraction),
                        format_double(row.implied_bound)});
  }
  o.csv = csv.str();
  return o;
}

Outcome norm_certify(const ExperimentConfig& c) {
  const json fam = read_json_file(input(c, "family").get<std::string>());
  const FieldSpec k = field_from_json(fam.at("field"));
  const auto phi =
      function_table_from_json(k, read_json_file(input(c, "phi").get<std::string>()));
  const double A = input(c, "A").get<double>();
  const double gamma = c.gamma.value_or(0.5);
  const double s = c.s.value_or(6.0);
  NormCertificate cert;
  if (fam.contains("standard_cmax")) {
    cert = certificate_check(phi, KernelFamily::standard(k, fam["standard_cmax"].get<int>()), A,
                             gamma, s);
  } else {
    cert = certificate_check(phi, samples_from_file(input(c, "family").get<std::string>()), A,
                             gamma, s);
  }
  Outcome o;
  o.report = to_json(cert);
  return o;
}

Outcome norm_tail(const ExperimentConfig& c) {
  const TraceSample kernel = kernel_from_file(input(c, "kernel").get<std::string>());
  const TailExperiment t =
      tail_experiment(kernel, random_spec(c), c.alpha, c.s.value_or(2.0), c.trials, c.jobs);
  Outcome o;
  o.report = to_json(t);
  o.pass = t.within;
  return o;
}

Outcome verify(const ExperimentConfig& c) {
  VerifyOptions opt;
  opt.profile = c.profile;
  opt.seed = c.seed;
  opt.jobs = c.jobs;
  if (c.inputs.contains("only")) opt.only = c.inputs["only"].get<std::vector<int>>();
  if (c.inputs.contains("inject")) opt.inject_violation = c.inputs["inject"].get<int>();
  const VerifyReport rep = verify_all(opt);
  Outcome o;
  o.report = to_json(rep);
  o.pass = rep.pass;
  std::ostringstream csv;
  write_csv_row(csv, {"id", "name", "pass", "summary"});
  for (const auto& r : rep.criteria) {
    write_csv_row(csv, {std::to_string(r.id), r.name, r.pass ? "PASS" : "FAIL", r.summary});
  }
  o.csv = csv.str();
  return o;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("cannot write " + path);
}

}  // namespace

Outcome execute(const ExperimentConfig& config) {
  const std::string& cmd = config.command;
  try {
    if (cmd == "bound kl") return bound_kl(config);
    if (cmd == "bound count") return bound_count(config);
    if (cmd == "family ask") return family_ask(config);
    if (cmd == "family supermorse") return family_supermorse(config);
    if (cmd == "family fourier") return family_fourier(config);
    if (cmd == "gram") return gram(config);
    if (cmd == "code") return code(config);
    if (cmd == "enumerate") return enumerate(config);
    if (cmd == "inject") return inject(config);
    if (cmd == "norm random") return norm_random(config);
    if (cmd == "norm certify") return norm_certify(config);
    if (cmd == "norm tail") return norm_tail(config);
    if (cmd == "verify") return verify(config);
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  throw PreconditionError("unknown command: " + cmd);
}

int run(ExperimentConfig config) {
  try {
    apply_seed_override(config);
    const std::string started = utc_now();
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = execute(config);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.report["meta"] = {{"version", kVersion},
                        {"config", to_json(config)},
                        {"seed", config.seed},
                        {"started_at", started},
                        {"wall_seconds", secs}};
    if (!config.csv_output.empty()) {
      require(o.csv.has_value(), "this command has no tabular payload");
      write_text(config.csv_output, *o.csv);
    }
    write_text(config.output, o.report.dump(2) + "\n");
    return o.pass ? kExitOk : kExitFailure;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const FormatError& e) {
    std::cerr << "format: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace tracecodes::cli
