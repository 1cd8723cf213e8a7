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

// Inner products of trace samples and the checks built on them.
//
// All inner products are (1/q) sum_{x in U} K1(x) conj(K2(x)), normalized by
// q and not by |U|. Inequalities pass when the value is within a relative
// slack of kSlack above the bound.
//
// Two paths exist. The generic one takes explicit samples. The family one
// takes an AskClassFamily and uses the fact that the product of two members
// depends only on their difference: it evaluates every difference class
// once, with a cyclic DFT over the linear coefficient on prime fields.

#ifndef TRACECODES_ORTHOGONALITY_HPP_
#define TRACECODES_ORTHOGONALITY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tracecodes/sheaf.hpp"

namespace tracecodes {

inline constexpr double kSlack = 1e-9;

inline bool within_bound(double value, double bound) {
  return value <= bound + kSlack * std::max(1.0, std::abs(bound));
}

Complex inner_product(const TraceSample& a, const TraceSample& b);

using IsoOracle = std::function<bool(const TraceSample&, const TraceSample&)>;
// ask_geom_isomorphic for two ASK samples with equal characters, descriptor
// id equality otherwise.
IsoOracle default_iso_oracle();

struct PairRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint64_t id1 = 0;
  std::uint64_t id2 = 0;
  int r1 = 1;
  int r2 = 1;
  int conductor = 1;  // max of the two
  Complex value;
  double bound = 0;   // 3 c r1 r2 / sqrt(q)
  bool isomorphic = false;
  bool pass = true;
};

struct DiagonalRecord {
  std::size_t i = 0;
  std::uint64_t id = 0;
  int rank = 1;
  int conductor = 1;
  Complex value;
  double bound = 0;  // on |value - 1|: 3 c r^2 / sqrt(q)
  bool pass = true;
};

struct GramReport {
  std::uint64_t q = 0;
  int c = 0;  // max conductor
  std::uint64_t domain_size = 0;
  bool common_domain = true;
  std::vector<PairRecord> pairs;
  std::vector<DiagonalRecord> diagonal;
  std::size_t violations = 0;
  double max_hermitian_defect = 0;
};

struct GramOptions {
  // Accept samples on different open sets, comparing on the intersection.
  bool force = false;
  // Use this conductor for every bound instead of the samples' own values.
  std::optional<int> conductor_override;
  unsigned jobs = 1;
};

// Samples need rank and conductor unless conductor_override is set.
GramReport verify_gram(const std::vector<TraceSample>& samples, const IsoOracle& iso,
                       const GramOptions& options = {});

// (2c + nU) r1 r2
long long h1_bound(long long c, long long n_u, long long r1, long long r2);

struct EmbeddedCode {
  std::size_t dimension = 0;  // 2 |U|
  std::vector<std::vector<double>> vectors;
  std::vector<std::vector<double>> cosine;
  double min_angle = 0;  // radians, over distinct indices
};

// Requires a common domain and no identically zero sample.
EmbeddedCode embed(const std::vector<TraceSample>& samples);

struct CodeReport {
  std::uint64_t q = 0;
  int c = 0;
  int r = 0;
  std::uint64_t domain_size = 0;
  bool precondition_ok = false;  // 12 c r^2 < sqrt(q)
  std::string warning;
  double max_cosine = -1;
  double cosine_bound = 0;  // 6 c r^2 / sqrt(q)
  double chain_bound = 0;   // 3 sqrt(10) c r^2 / sqrt(2 |U|)
  bool chain_ok = false;    // cosine_bound <= chain_bound
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t code_length = 0;  // n = 2 |U|
  double code_gamma = 0;          // 3 sqrt(10) c r^2
  double min_angle = 0;
  bool pass = false;
};

CodeReport code_report(const std::vector<TraceSample>& samples, int c, int r,
                       const IsoOracle& iso);

struct InjectivityReport {
  std::uint64_t q = 0;
  int c = 0;
  int r = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t proportional_pairs = 0;
  std::uint64_t failures = 0;  // proportional but not isomorphic
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
  bool pass = false;
};

// Throws PreconditionError unless 6 c r^2 < sqrt(q).
InjectivityReport injectivity_check(const std::vector<TraceSample>& samples,
                                    const IsoOracle& iso);

// ---- structured family path ----

struct FamilyDifferenceRecord {
  std::vector<FieldElement> f1;  // a_1..a_D of the difference
  std::uint64_t kummer = 0;      // exponent difference mod d
  Complex value;
  double bound = 0;
};

struct FamilyGramReport {
  std::uint64_t q = 0;
  int c = 0;
  std::uint64_t chi_order = 1;
  std::uint64_t family_size = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t differences_checked = 0;
  double pair_count = 0;  // size (size - 1) / 2
  double bound = 0;       // 3 c / sqrt(q)
  double max_offdiagonal = 0;
  // Tightest pair bound: the smallest max conductor over pairs with a given
  // difference is the family conductor formula applied to the difference.
  std::uint64_t tight_violations = 0;
  double max_tight_ratio = 0;
  // Diagonal evaluated in exponent arithmetic, so it is exactly |U| / q.
  std::uint64_t diagonal_members = 0;
  double diagonal_min = 0;
  double diagonal_max = 0;
  double diagonal_expected = 0;  // |U| / q
  bool diagonal_exact = false;
  bool diagonal_within_bound = false;
  std::vector<FamilyDifferenceRecord> violations;  // capped
  std::uint64_t violation_count = 0;
  bool pass = false;
};

// Every member pair of the family, through its difference classes.
FamilyGramReport verify_gram_family(const AskClassFamily& family, unsigned jobs = 1);

struct FamilyInjectivityReport {
  std::uint64_t q = 0;
  int c = 0;
  std::uint64_t family_size = 0;
  bool precondition_ok = false;
  std::uint64_t differences_checked = 0;
  std::uint64_t proportional = 0;  // nonzero differences with |<K1,K2>| = |U|/q
  double max_ratio = 0;            // max |<K1,K2>| / (|U|/q)
  bool pass = false;
};

// Throws PreconditionError unless 6 c < sqrt(q).
FamilyInjectivityReport injectivity_check_family(const AskClassFamily& family,
                                                 unsigned jobs = 1);

struct FamilyCodeReport {
  CodeReport chain;
  std::uint64_t differences_checked = 0;
  // Direct evaluation on sampled member pairs, as a cross-check.
  std::uint64_t sampled_pairs = 0;
  double sampled_max_cosine = -1;
  std::uint64_t sampled_violations = 0;
  double max_route_discrepancy = 0;  // |direct - difference table|
};

// Exhaustive over difference classes plus `sample_pairs` random member
// pairs evaluated from explicit samples (seeded).
FamilyCodeReport code_report_family(const AskClassFamily& family, int r,
                                    std::uint64_t sample_pairs, std::uint64_t seed,
                                    unsigned jobs = 1);

// Visits every difference class of the family. Blocks are indexed by the
// coefficients a_2..a_D and the Kummer exponent difference; `values[a]` is
// the inner product for linear coefficient element(a).
struct DifferenceBlock {
  std::vector<FieldElement> top;  // a_2..a_D
  std::uint64_t kummer = 0;
  int top_degree = -1;  // highest i >= 2 with a_i != 0, else -1
};
void for_each_difference(
    const AskClassFamily& family, unsigned jobs,
    const std::function<void(std::size_t block, const DifferenceBlock&,
                             const std::vector<Complex>& values)>& visit,
    std::size_t* block_count = nullptr);
std::size_t difference_block_count(const AskClassFamily& family);

}  // namespace tracecodes

#endif  // TRACECODES_ORTHOGONALITY_HPP_
