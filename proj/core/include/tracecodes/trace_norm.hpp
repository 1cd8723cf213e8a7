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

// Random bounded functions on k, trace-norm estimates and Monte-Carlo tail
// experiments. Logarithms are natural throughout.
//
// Trial t of any experiment draws its function from the stream
// (seed, t), so serial and threaded runs agree bitwise.

#ifndef TRACECODES_TRACE_NORM_HPP_
#define TRACECODES_TRACE_NORM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tracecodes/kernel_family.hpp"
#include "tracecodes/sheaf.hpp"

namespace tracecodes {

struct Atom {
  Complex value;
  double weight = 0;
};

struct RandomFunctionSpec {
  enum class Distribution { kRademacher, kUniformCircle, kTable };
  Distribution distribution = Distribution::kRademacher;
  std::uint64_t seed = 0;
  std::vector<Atom> atoms;  // kTable only

  static RandomFunctionSpec rademacher(std::uint64_t seed);
  static RandomFunctionSpec uniform_circle(std::uint64_t seed);
  static RandomFunctionSpec table(std::vector<Atom> atoms, std::uint64_t seed);

  // Throws PreconditionError for tables with nonpositive total weight,
  // negative weights, |atom| > 1, or a nonzero mean.
  void validate() const;
  double second_moment() const;        // E|X|^2
  double first_absolute_moment() const;  // E|X|
  std::string name() const;
};

// q independent draws indexed by element code.
std::vector<Complex> sample_random_function(const RandomFunctionSpec& rspec,
                                            const FieldSpec& k, std::uint64_t stream = 0);

// sqrt(q) (1/q) sum |phi(x)|
double trivial_norm_upper(const std::vector<Complex>& phi);

// The three hypotheses reduce to three numbers per function.
struct PhiStatistics {
  std::uint64_t q = 0;
  double sup = 0;               // max |phi|
  double energy = 0;            // sum |phi|^2
  double max_correlation = 0;   // max |sum K phi| / cond^s over the family
  std::string argmax_kernel;
  int argmax_conductor = 1;
  std::uint64_t kernels = 0;
};

struct NormCertificate {
  std::uint64_t q = 0;
  double A = 0;
  double gamma_exp = 0;
  double s = 0;

  double sup = 0;
  double sup_limit = 0;  // A q^{1/2 - gamma}
  bool sup_ok = false;

  double max_correlation = 0;  // max |sum K phi| / cond^s
  double correlation_limit = 0;  // A q^{1 - gamma}
  std::string argmax_kernel;
  int argmax_conductor = 1;
  std::uint64_t kernels_tested = 0;
  bool correlation_ok = false;

  double energy = 0;
  double energy_limit = 0;  // q / A
  bool energy_ok = false;

  double implied_bound = 0;  // A^{-2} q^gamma
  bool certified = false;
  std::string status = "conditional";
  nlohmann::json family = nlohmann::json::object();
};

NormCertificate evaluate_certificate(const PhiStatistics& stats, double A, double gamma_exp,
                                     double s);
double implied_norm_bound(double A, double gamma_exp, std::uint64_t q);

// Correlation sums run over each sample's domain, i.e. the kernel extended by
// zero to k. Throws PreconditionError on an empty family, a field mismatch, a
// sample without a conductor, or a table of the wrong length.
NormCertificate certificate_check(const std::vector<Complex>& phi,
                                  const std::vector<TraceSample>& family, double A,
                                  double gamma_exp, double s);
NormCertificate certificate_check(const std::vector<Complex>& phi, const KernelFamily& family,
                                  double A, double gamma_exp, double s);

PhiStatistics phi_statistics(const std::vector<Complex>& phi,
                             const std::vector<TraceSample>& family, double s);
PhiStatistics phi_statistics(const std::vector<Complex>& phi, const KernelFamily& family,
                             double s);

struct TailExperiment {
  std::uint64_t descriptor_id = 0;
  int conductor = 1;
  std::uint64_t q = 0;
  double alpha = 0;
  double s = 0;
  std::uint64_t trials = 0;
  double threshold = 0;  // alpha cond^s sqrt(q ln q)
  std::uint64_t exceedances = 0;
  double frequency = 0;
  double bound = 0;           // min(1, 8 q^{-alpha^2 cond^{2s-2} / 2})
  double standard_error = 0;  // sqrt(bound (1 - bound) / trials)
  bool within = false;        // frequency <= bound + 3 standard errors
};

// Requires s >= 2, alpha > 0, trials >= 1 and a conductor on the sample.
TailExperiment tail_experiment(const TraceSample& kernel, const RandomFunctionSpec& rspec,
                               double alpha, double s, std::uint64_t trials,
                               unsigned jobs = 1);

struct ConcentrationReport {
  std::uint64_t q = 0;
  std::uint64_t trials = 0;
  double nu1 = 0;
  double nu2 = 0;
  double energy_frequency = 0;  // P(sum |phi|^2 >= nu1 q)
  double l1_frequency = 0;      // P(sum |phi| >= nu2 q)
  double required = 0;          // 1 - 10 / trials
  bool checked = false;         // q >= 101
  bool pass = true;
};

// nu1 defaults to E|X|^2 / 2 and nu2 to E|X| / 2.
ConcentrationReport concentration_experiment(const RandomFunctionSpec& rspec,
                                             const FieldSpec& k,
                                             std::optional<double> nu1,
                                             std::optional<double> nu2,
                                             std::uint64_t trials, unsigned jobs = 1);

struct RandomNormOptions {
  std::uint64_t trials = 1000;
  std::vector<double> alphas = {1, 2, 4, 8};
  double gamma_exp = 0.5;
  double s = 6;
  double target_fraction = 0.99;
  unsigned jobs = 1;
};

struct AlphaRow {
  double alpha = 0;
  double A = 0;  // alpha sqrt(ln q)
  std::uint64_t certified = 0;
  double fraction = 0;
  double implied_bound = 0;
};

struct RandomNormReport {
  std::uint64_t q = 0;
  std::uint64_t trials = 0;
  std::string distribution;
  std::uint64_t seed = 0;
  double gamma_exp = 0;
  double s = 0;
  std::vector<AlphaRow> rows;
  std::optional<double> smallest_alpha;  // first alpha reaching the target
  double min_trivial_upper = 0;
  // No certified trial reports a lower bound above its trivial upper bound.
  bool consistent = true;
  std::string status = "conditional";
  nlohmann::json family = nlohmann::json::object();
};

RandomNormReport random_norm_experiment(const KernelFamily& family,
                                        const RandomFunctionSpec& rspec,
                                        const RandomNormOptions& options);

nlohmann::json to_json(const RandomFunctionSpec& r);
RandomFunctionSpec random_function_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const NormCertificate& c);
nlohmann::json to_json(const TailExperiment& t);
nlohmann::json to_json(const ConcentrationReport& c);
nlohmann::json to_json(const RandomNormReport& r);

}  // namespace tracecodes

#endif  // TRACECODES_TRACE_NORM_HPP_
