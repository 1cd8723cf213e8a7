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

// tracecodes: command-line driver.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/verify.hpp"
#include "tracecodes/version.hpp"

namespace {

using tracecodes::ExperimentConfig;
using nlohmann::json;

// Values collected from flags; copied into the config only when given.
struct Flags {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::vector<std::uint32_t> modulus;
  std::uint64_t q = 0;
  std::uint64_t bound_n = 0;
  double gamma = 0;
  double s = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> f1, f2_num, f2_den, f, psi, transform_psi;
  std::vector<double> alphas;
  std::vector<int> only;
  int inject = 0;
  double cosphi = 0;
  double A = 0;
  std::uint64_t limit = 0;
  std::uint64_t samples = 0;
  std::uint64_t u_size = 0;
  std::string input, phi, family, kernel, atoms, config_path;
  bool force = false;
  bool mext = false;
};

struct Registered {
  CLI::App* app;
  std::string command;
};

void add_field(CLI::App* sub, Flags& fl) {
  sub->add_option("--p", fl.p, "Characteristic");
  sub->add_option("--n", fl.n, "Extension degree");
  sub->add_option("--modulus", fl.modulus, "Ascending modulus coefficients")->delimiter(',');
  sub->add_option("--q", fl.q, "Field size, a prime power");
}

void add_family(CLI::App* sub, ExperimentConfig& cfg) {
  sub->add_option("--c,--cmax", cfg.c, "Maximal conductor");
  sub->add_option("--chi-index,--chi", cfg.chi, "Multiplicative character index m");
}

void add_ask(CLI::App* sub, Flags& fl) {
  sub->add_option("--f1", fl.f1, "f1 coefficient codes, constant first")->delimiter(',');
  sub->add_option("--f2-num", fl.f2_num, "f2 numerator coefficient codes")->delimiter(',');
  sub->add_option("--f2-den", fl.f2_den, "f2 denominator coefficient codes")->delimiter(',');
  sub->add_option("--psi", fl.psi, "Additive character a, as coefficients")->delimiter(',');
}

void add_random(CLI::App* sub, ExperimentConfig& cfg, Flags& fl) {
  sub->add_option("--dist,--distribution", cfg.distribution,
                  "rademacher | uniform-circle | table")
      ->check(CLI::IsMember({"rademacher", "uniform-circle", "table"}));
  sub->add_option("--atoms", fl.atoms, "JSON file of {re, im, weight} atoms for table");
  sub->add_option("--trials", cfg.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
}

bool given(const CLI::App* sub, const char* name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

template <class T>
void copy_if(const CLI::App* sub, const char* name, json& inputs, const char* key, const T& v) {
  if (given(sub, name)) inputs[key] = v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-function codes: orthogonality, spherical bounds and trace norms."};
  app.set_version_flag("--version", std::string(tracecodes::kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  ExperimentConfig cfg;
  Flags fl;

  app.add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output,-o", cfg.output, "JSON report path (default stdout)");
  app.add_option("--csv", cfg.csv_output, "CSV path for the tabular payload");
  auto* seed_opt = app.add_option("--seed", fl.seed, "RNG seed");

  std::vector<Registered> subs;

  auto* bound = app.add_subcommand("bound", "Spherical-code and counting bounds");
  bound->require_subcommand(1);
  auto* kl = bound->add_subcommand("kl", "Polynomial Kabatjanskii-Levenshtein bound");
  kl->add_option("--n", fl.bound_n, "Dimension")->required();
  kl->add_option("--gamma", fl.gamma, "Angle parameter gamma");
  kl->add_option("--cosphi", fl.cosphi, "Bound at a given cos(phi) instead");
  subs.push_back({kl, "bound kl"});

  auto* count = bound->add_subcommand("count", "Upper bound on the number of classes");
  count->add_option("--q", fl.q, "Field size")->required();
  count->add_option("--c", cfg.c, "Conductor");
  count->add_option("--r", cfg.r, "Rank");
  count->add_option("--constant", cfg.constant, "Field-size constant (1500 or 1265)");
  count->add_flag("--raw", cfg.raw, "Compute outside the theorem regime");
  count->add_option("--U", fl.u_size, "|U(k)| (default q)");
  count->add_flag("--mext", fl.mext, "Middle-extension count over all open sets");
  count->add_option("--g", cfg.genus_g, "Genus for --mext");
  subs.push_back({count, "bound count"});

  auto* family = app.add_subcommand("family", "Trace functions of one sheaf");
  family->require_subcommand(1);
  auto* ask = family->add_subcommand("ask", "Artin-Schreier-Kummer sheaf");
  add_field(ask, fl);
  add_ask(ask, fl);
  ask->add_option("--chi-index,--chi", cfg.chi, "Multiplicative character index m");
  subs.push_back({ask, "family ask"});

  auto* sm = family->add_subcommand("supermorse", "Supermorse sheaf");
  add_field(sm, fl);
  sm->add_option("--f", fl.f, "f coefficient codes, constant first")
      ->delimiter(',')
      ->required();
  subs.push_back({sm, "family supermorse"});

  auto* fourier = family->add_subcommand("fourier", "Fourier transform of a sample");
  add_field(fourier, fl);
  add_ask(fourier, fl);
  fourier->add_option("--chi-index,--chi", cfg.chi, "Multiplicative character index m");
  fourier->add_option("--input", fl.input, "Sample JSON file to transform");
  fourier->add_option("--transform-psi", fl.transform_psi, "Transform character a")
      ->delimiter(',');
  subs.push_back({fourier, "family fourier"});

  auto* gram = app.add_subcommand("gram", "Gram matrix against the orthogonality bounds");
  add_field(gram, fl);
  add_family(gram, cfg);
  gram->add_option("--input", fl.input, "Samples JSON file instead of the ASK family");
  gram->add_flag("--force", fl.force, "Compare samples on the intersection of their domains");
  subs.push_back({gram, "gram"});

  auto* code = app.add_subcommand("code", "Spherical code of a family");
  add_field(code, fl);
  add_family(code, cfg);
  code->add_option("--r", cfg.r, "Rank");
  code->add_option("--input", fl.input, "Samples JSON file instead of the ASK family");
  code->add_option("--samples", fl.samples, "Directly evaluated member pairs");
  code->add_option("--seed", fl.seed, "RNG seed");
  subs.push_back({code, "code"});

  auto* enumerate = app.add_subcommand("enumerate", "Count and list ASK classes");
  add_field(enumerate, fl);
  add_family(enumerate, cfg);
  enumerate->add_option("--limit", fl.limit, "List classes only up to this count");
  subs.push_back({enumerate, "enumerate"});

  auto* inject = app.add_subcommand("inject", "Injectivity of the trace map on a family");
  add_field(inject, fl);
  add_family(inject, cfg);
  subs.push_back({inject, "inject"});

  auto* norm = app.add_subcommand("norm", "Trace norms");
  norm->require_subcommand(1);
  auto* nrandom = norm->add_subcommand("random", "Certificates for random functions");
  add_field(nrandom, fl);
  nrandom->add_option("--c,--cmax", cfg.c, "Maximal conductor of the kernel family");
  add_random(nrandom, cfg, fl);
  nrandom->add_option("--seed", fl.seed, "RNG seed");
  nrandom->add_option("--alphas", fl.alphas, "Certificate scales alpha")->delimiter(',');
  nrandom->add_option("--gamma", fl.gamma, "Exponent gamma");
  nrandom->add_option("--s", fl.s, "Conductor weight exponent");
  subs.push_back({nrandom, "norm random"});

  auto* certify = norm->add_subcommand("certify", "Certificate for a given function");
  certify->add_option("--phi", fl.phi, "Function table JSON file")->required();
  certify->add_option("--family", fl.family, "Kernel family JSON file")->required();
  certify->add_option("--A", fl.A, "Certificate constant A")->required();
  certify->add_option("--gamma", fl.gamma, "Exponent gamma");
  certify->add_option("--s", fl.s, "Conductor weight exponent");
  subs.push_back({certify, "norm certify"});

  auto* tail = norm->add_subcommand("tail", "Tail frequency of one correlation");
  tail->add_option("--kernel", fl.kernel, "Kernel JSON file")->required();
  tail->add_option("--alpha", cfg.alpha, "Threshold scale");
  tail->add_option("--s", fl.s, "Conductor weight exponent");
  add_random(tail, cfg, fl);
  tail->add_option("--seed", fl.seed, "RNG seed");
  subs.push_back({tail, "norm tail"});

  auto* verify = app.add_subcommand("verify", "Acceptance suite");
  verify->add_option("--profile", cfg.profile, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--only", fl.only, "Criteria to run")->delimiter(',');
  verify->add_option("--inject", fl.inject, "Force a violation in this criterion");
  verify->add_option("--seed", fl.seed, "RNG seed");

  auto* runcmd = app.add_subcommand("run", "Run a saved ExperimentConfig");
  runcmd->add_option("--config", fl.config_path, "Config JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? tracecodes::cli::kExitOk : tracecodes::cli::kExitPrecondition;
  }

  if (runcmd->parsed()) {
    try {
      std::ifstream in(fl.config_path);
      if (!in) throw tracecodes::FormatError("cannot read " + fl.config_path);
      ExperimentConfig loaded = tracecodes::config_from_json(json::parse(in));
      if (given(&app, "--jobs")) loaded.jobs = cfg.jobs;
      if (given(&app, "--output")) loaded.output = cfg.output;
      if (given(&app, "--csv")) loaded.csv_output = cfg.csv_output;
      if (seed_opt->count() > 0) loaded.seed = fl.seed;
      return tracecodes::cli::run(std::move(loaded));
    } catch (const std::exception& e) {
      std::cerr << "format: " << e.what() << "\n";
      return tracecodes::cli::kExitPrecondition;
    }
  }

  CLI::App* chosen = verify->parsed() ? verify : nullptr;
  cfg.command = "verify";
  for (const auto& r : subs) {
    if (r.app->parsed()) {
      chosen = r.app;
      cfg.command = r.command;
    }
  }
  if (chosen == nullptr) {
    std::cerr << app.help();
    return tracecodes::cli::kExitPrecondition;
  }

  if (given(chosen, "--p")) cfg.p = fl.p;
  if (given(chosen, "--n") && cfg.command != "bound kl") cfg.n = fl.n;
  if (given(chosen, "--modulus")) cfg.modulus = fl.modulus;
  if (given(chosen, "--q")) cfg.bound_q = fl.q;
  if (cfg.command == "bound kl") cfg.bound_n = fl.bound_n;
  if (given(chosen, "--gamma")) cfg.gamma = fl.gamma;
  if (given(chosen, "--s")) cfg.s = fl.s;
  if (seed_opt->count() > 0 || given(chosen, "--seed")) {
    cfg.seed = fl.seed;
  } else if (cfg.command == "verify") {
    cfg.seed = tracecodes::kDefaultSeed;
  }

  json& in = cfg.inputs;
  copy_if(chosen, "--f1", in, "f1", fl.f1);
  copy_if(chosen, "--f2-num", in, "f2_num", fl.f2_num);
  copy_if(chosen, "--f2-den", in, "f2_den", fl.f2_den);
  copy_if(chosen, "--psi", in, "psi", fl.psi);
  copy_if(chosen, "--f", in, "f", fl.f);
  copy_if(chosen, "--transform-psi", in, "transform_psi", fl.transform_psi);
  copy_if(chosen, "--input", in, "input", fl.input);
  copy_if(chosen, "--cosphi", in, "cosphi", fl.cosphi);
  copy_if(chosen, "--U", in, "U", fl.u_size);
  copy_if(chosen, "--limit", in, "limit", fl.limit);
  copy_if(chosen, "--samples", in, "samples", fl.samples);
  copy_if(chosen, "--alphas", in, "alphas", fl.alphas);
  copy_if(chosen, "--atoms", in, "atoms", fl.atoms);
  copy_if(chosen, "--phi", in, "phi", fl.phi);
  copy_if(chosen, "--family", in, "family", fl.family);
  copy_if(chosen, "--A", in, "A", fl.A);
  copy_if(chosen, "--kernel", in, "kernel", fl.kernel);
  copy_if(chosen, "--only", in, "only", fl.only);
  copy_if(chosen, "--inject", in, "inject", fl.inject);
  if (fl.force) in["force"] = true;
  if (fl.mext) in["mext"] = true;

  return tracecodes::cli::run(std::move(cfg));
}
