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

#include "tracecodes/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tracecodes/dft.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/parallel.hpp"

namespace tracecodes {

namespace {

constexpr std::size_t kMaxRecordedViolations = 64;

std::vector<FieldElement> common_domain(const std::vector<TraceSample>& samples) {
  if (samples.empty()) return {};
  std::vector<FieldElement> dom = samples[0].domain;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    std::vector<FieldElement> next;
    std::set_intersection(dom.begin(), dom.end(), samples[i].domain.begin(),
                          samples[i].domain.end(), std::back_inserter(next));
    dom = std::move(next);
  }
  return dom;
}

bool domains_equal(const std::vector<TraceSample>& samples) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].domain != samples[0].domain) return false;
  }
  return true;
}

void require_same_field(const std::vector<TraceSample>& samples) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    require(samples[i].spec == samples[0].spec, "samples live on different fields");
  }
}

// Values of s on dom (a subset of s.domain), in order.
std::vector<Complex> restrict_to(const TraceSample& s, const std::vector<FieldElement>& dom) {
  std::vector<Complex> out;
  out.reserve(dom.size());
  std::size_t j = 0;
  for (auto x : dom) {
    while (s.domain[j] < x) ++j;
    out.push_back(s.values[j]);
  }
  return out;
}

int max_conductor(const std::vector<TraceSample>& samples) {
  int c = 1;
  for (const auto& s : samples) {
    require(s.conductor.has_value(), "sample has no conductor");
    c = std::max(c, *s.conductor);
  }
  return c;
}

int max_rank(const std::vector<TraceSample>& samples) {
  int r = 1;
  for (const auto& s : samples) {
    require(s.rank.has_value(), "sample has no rank");
    r = std::max(r, *s.rank);
  }
  return r;
}

}  // namespace

Complex inner_product(const TraceSample& a, const TraceSample& b) {
  require(a.spec == b.spec, "inner_product: samples live on different fields");
  Complex sum = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.domain.size() && j < b.domain.size()) {
    if (a.domain[i] < b.domain[j]) {
      ++i;
    } else if (b.domain[j] < a.domain[i]) {
      ++j;
    } else {
      sum += a.values[i] * std::conj(b.values[j]);
      ++i;
      ++j;
    }
  }
  return sum / static_cast<double>(a.spec.q());
}

IsoOracle default_iso_oracle() {
  return [](const TraceSample& a, const TraceSample& b) {
    if (a.descriptor && b.descriptor) {
      const auto* x = std::get_if<AskDescriptor>(&a.descriptor->value);
      const auto* y = std::get_if<AskDescriptor>(&b.descriptor->value);
      if (x != nullptr && y != nullptr && x->psi_a == y->psi_a &&
          x->chi_m % (a.spec.q() - 1) == y->chi_m % (a.spec.q() - 1)) {
        return ask_geom_isomorphic(a.spec, *x, *y);
      }
    }
    return a.descriptor_id == b.descriptor_id;
  };
}

GramReport verify_gram(const std::vector<TraceSample>& samples, const IsoOracle& iso,
                       const GramOptions& options) {
  GramReport report;
  if (samples.empty()) return report;
  require_same_field(samples);
  report.common_domain = domains_equal(samples);
  require(report.common_domain || options.force,
          "verify_gram: samples live on different open sets (use force to compare "
          "on the intersection)");
  const double q = static_cast<double>(samples[0].spec.q());
  report.q = samples[0].spec.q();
  report.domain_size = common_domain(samples).size();

  const std::size_t n = samples.size();
  std::vector<int> cond(n);
  std::vector<int> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (options.conductor_override) {
      cond[i] = *options.conductor_override;
    } else {
      require(samples[i].conductor.has_value(), "verify_gram: sample has no conductor");
      cond[i] = *samples[i].conductor;
    }
    require(samples[i].rank.has_value(), "verify_gram: sample has no rank");
    rank[i] = *samples[i].rank;
    report.c = std::max(report.c, cond[i]);
  }

  report.diagonal.resize(n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    DiagonalRecord d;
    d.i = i;
    d.id = samples[i].descriptor_id;
    d.rank = rank[i];
    d.conductor = cond[i];
    d.value = inner_product(samples[i], samples[i]);
    d.bound = 3.0 * cond[i] * rank[i] * rank[i] / std::sqrt(q);
    d.pass = within_bound(std::abs(d.value - 1.0), d.bound);
    report.diagonal[i] = d;
  });

  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) index.emplace_back(i, j);
  }
  report.pairs.resize(index.size());
  std::vector<double> defect(index.size(), 0.0);
  parallel_for(index.size(), options.jobs, [&](std::size_t t) {
    const auto [i, j] = index[t];
    PairRecord p;
    p.i = i;
    p.j = j;
    p.id1 = samples[i].descriptor_id;
    p.id2 = samples[j].descriptor_id;
    p.r1 = rank[i];
    p.r2 = rank[j];
    p.conductor = std::max(cond[i], cond[j]);
    p.value = inner_product(samples[i], samples[j]);
    defect[t] = std::abs(p.value - std::conj(inner_product(samples[j], samples[i])));
    p.bound = 3.0 * p.conductor * p.r1 * p.r2 / std::sqrt(q);
    p.isomorphic = iso(samples[i], samples[j]);
    p.pass = p.isomorphic || within_bound(std::abs(p.value), p.bound);
    report.pairs[t] = p;
  });
  for (const auto& d : report.diagonal) report.violations += d.pass ? 0 : 1;
  for (const auto& p : report.pairs) report.violations += p.pass ? 0 : 1;
  for (double d : defect) report.max_hermitian_defect = std::max(report.max_hermitian_defect, d);
  return report;
}

long long h1_bound(long long c, long long n_u, long long r1, long long r2) {
  require(c > 0 && n_u > 0 && r1 > 0 && r2 > 0, "h1_bound: arguments must be positive");
  return (2 * c + n_u) * r1 * r2;
}

EmbeddedCode embed(const std::vector<TraceSample>& samples) {
  EmbeddedCode code;
  if (samples.empty()) return code;
  require_same_field(samples);
  const auto dom = common_domain(samples);
  code.dimension = 2 * dom.size();
  for (const auto& s : samples) {
    const auto vals = restrict_to(s, dom);
    std::vector<double> v;
    v.reserve(code.dimension);
    double norm2 = 0;
    for (auto z : vals) {
      v.push_back(z.real());
      v.push_back(z.imag());
      norm2 += std::norm(z);
    }
    require(norm2 > 0, "embed: sample vanishes on the common domain");
    const double norm = std::sqrt(norm2);
    for (auto& e : v) e /= norm;
    code.vectors.push_back(std::move(v));
  }
  const std::size_t n = code.vectors.size();
  code.cosine.assign(n, std::vector<double>(n, 0.0));
  double max_cos = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double dot = 0;
      for (std::size_t t = 0; t < code.dimension; ++t) dot += code.vectors[i][t] * code.vectors[j][t];
      code.cosine[i][j] = dot;
      code.cosine[j][i] = dot;
      if (i != j) max_cos = std::max(max_cos, dot);
    }
  }
  code.min_angle = n > 1 ? std::acos(std::clamp(max_cos, -1.0, 1.0)) : M_PI;
  return code;
}

namespace {

void fill_chain(CodeReport& r) {
  const double q = static_cast<double>(r.q);
  const double cr2 = static_cast<double>(r.c) * r.r * r.r;
  r.precondition_ok = 12.0 * cr2 < std::sqrt(q);
  if (!r.precondition_ok) r.warning = "12 c r^2 >= sqrt(q): the bound chain is not guaranteed";
  r.cosine_bound = 6.0 * cr2 / std::sqrt(q);
  r.chain_bound = 3.0 * std::sqrt(10.0) * cr2 / std::sqrt(2.0 * static_cast<double>(r.domain_size));
  r.chain_ok = within_bound(r.cosine_bound, r.chain_bound);
  r.code_length = 2 * r.domain_size;
  r.code_gamma = 3.0 * std::sqrt(10.0) * cr2;
}

}  // namespace

CodeReport code_report(const std::vector<TraceSample>& samples, int c, int r,
                       const IsoOracle& iso) {
  require(c >= 1 && r >= 1, "code_report: c and r must be positive");
  CodeReport rep;
  rep.c = c;
  rep.r = r;
  if (!samples.empty()) {
    rep.q = samples[0].spec.q();
    rep.domain_size = common_domain(samples).size();
  }
  fill_chain(rep);
  if (samples.size() >= 2) {
    const EmbeddedCode code = embed(samples);
    rep.min_angle = code.min_angle;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (std::size_t j = i + 1; j < samples.size(); ++j) {
        if (iso(samples[i], samples[j])) continue;
        ++rep.pairs_checked;
        rep.max_cosine = std::max(rep.max_cosine, code.cosine[i][j]);
        if (!within_bound(code.cosine[i][j], rep.cosine_bound)) ++rep.violations;
      }
    }
  }
  rep.pass = rep.violations == 0 && rep.chain_ok;
  return rep;
}

InjectivityReport injectivity_check(const std::vector<TraceSample>& samples,
                                    const IsoOracle& iso) {
  InjectivityReport rep;
  if (samples.empty()) {
    rep.pass = true;
    return rep;
  }
  require_same_field(samples);
  rep.q = samples[0].spec.q();
  rep.c = max_conductor(samples);
  rep.r = max_rank(samples);
  require(6.0 * rep.c * rep.r * rep.r < std::sqrt(static_cast<double>(rep.q)),
          "injectivity_check: requires 6 c r^2 < sqrt(q)");
  std::vector<double> norms;
  for (const auto& s : samples) norms.push_back(std::sqrt(std::abs(inner_product(s, s))));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      ++rep.pairs_checked;
      const double v = std::abs(inner_product(samples[i], samples[j]));
      if (v < norms[i] * norms[j] * (1.0 - kSlack)) continue;
      ++rep.proportional_pairs;
      if (!iso(samples[i], samples[j])) {
        ++rep.failures;
        rep.failing_pairs.emplace_back(i, j);
      }
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

// ---- structured family path ----

namespace {

std::vector<std::uint64_t> kummer_differences(const AskClassFamily& f) {
  if (f.trivial_chi() || f.chi_order() == 2) return {0};
  std::vector<std::uint64_t> out(f.chi_order());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::uint64_t top_block_count(const AskClassFamily& f) {
  std::uint64_t n = 1;
  for (int i = 2; i <= f.f1_terms(); ++i) n *= f.field().q();
  return n;
}

DifferenceBlock block_at(const AskClassFamily& f, std::size_t b) {
  const auto ks = kummer_differences(f);
  const std::uint64_t tops = top_block_count(f);
  DifferenceBlock blk;
  blk.kummer = ks[b / tops];
  std::uint64_t t = b % tops;
  for (int i = 2; i <= f.f1_terms(); ++i) {
    const FieldElement a = f.field().element(t % f.field().q());
    t /= f.field().q();
    blk.top.push_back(a);
    if (a.code != 0) blk.top_degree = i;
  }
  return blk;
}

std::size_t block_index_of(const AskClassFamily& f, const std::vector<FieldElement>& top,
                           std::uint64_t kummer) {
  const auto ks = kummer_differences(f);
  const auto pos = static_cast<std::uint64_t>(
      std::find(ks.begin(), ks.end(), kummer) - ks.begin());
  std::uint64_t t = 0;
  for (std::size_t i = top.size(); i-- > 0;) t = t * f.field().q() + top[i].code;
  return static_cast<std::size_t>(pos * top_block_count(f) + t);
}

int difference_degree(const DifferenceBlock& blk, std::uint64_t a1) {
  if (blk.top_degree >= 2) return blk.top_degree;
  return a1 != 0 ? 1 : -1;
}

}  // namespace

std::size_t difference_block_count(const AskClassFamily& family) {
  if (family.f1_terms() == 0) return 0;
  return static_cast<std::size_t>(top_block_count(family) * kummer_differences(family).size());
}

void for_each_difference(
    const AskClassFamily& family, unsigned jobs,
    const std::function<void(std::size_t, const DifferenceBlock&,
                             const std::vector<Complex>&)>& visit,
    std::size_t* block_count) {
  const FieldSpec& k = family.field();
  const std::size_t blocks = difference_block_count(family);
  if (block_count != nullptr) *block_count = blocks;
  if (blocks == 0) return;
  const std::uint64_t q = k.q();
  const AdditiveCharacter psi(k, k.one());
  const MultiplicativeCharacter chi(k, family.chi_m());
  const bool on_gm = !family.trivial_chi();
  std::vector<std::uint64_t> logs;
  if (on_gm) {
    logs.assign(q, 0);
    for (std::uint64_t i = 1; i < q; ++i) logs[i] = k.discrete_log(k.element(i));
  }
  const double inv_q = 1.0 / static_cast<double>(q);

  parallel_for(blocks, jobs, [&](std::size_t b) {
    const DifferenceBlock blk = block_at(family, b);
    std::vector<Complex> weight(q);
    for (std::uint64_t xi = 0; xi < q; ++xi) {
      const FieldElement x = k.element(xi);
      if (on_gm && xi == 0) {
        weight[xi] = 0;
        continue;
      }
      // top(x) = sum_{i >= 2} a_i x^i
      FieldElement acc = k.zero();
      for (std::size_t i = blk.top.size(); i-- > 0;) acc = k.mul(k.add(acc, blk.top[i]), x);
      acc = k.mul(acc, x);
      Complex w = psi(acc);
      if (on_gm && blk.kummer != 0) {
        w *= chi.from_log(logs[xi] * blk.kummer % (q - 1));
      }
      weight[xi] = w;
    }
    std::vector<Complex> values(q);
    if (k.is_prime_field()) {
      cyclic_dft(weight, values, +1);
    } else {
      for (std::uint64_t ai = 0; ai < q; ++ai) {
        const FieldElement a = k.element(ai);
        Complex s = 0;
        for (std::uint64_t xi = 0; xi < q; ++xi) {
          if (weight[xi] != Complex(0.0, 0.0)) s += weight[xi] * psi(k.mul(a, k.element(xi)));
        }
        values[ai] = s;
      }
    }
    for (auto& v : values) v *= inv_q;
    visit(b, blk, values);
  });
}

namespace {

struct BlockSummary {
  std::uint64_t checked = 0;
  double max_abs = 0;
  double max_tight_ratio = 0;
  std::uint64_t violations = 0;
  std::uint64_t tight_violations = 0;
  std::vector<FamilyDifferenceRecord> records;
};

// Diagonal <K, K> per member, from the exponent form of K(x) conj K(x).
void exact_diagonal(const AskClassFamily& family, unsigned jobs, FamilyGramReport& rep) {
  const FieldSpec& k = family.field();
  const std::uint64_t q = k.q();
  const RootsOfUnity roots_p(k.p());
  const RootsOfUnity roots_d(family.chi_order());
  const bool on_gm = !family.trivial_chi();
  const double sqrt_q = std::sqrt(static_cast<double>(q));
  const std::uint64_t n = family.size();
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> lo(chunks, 2.0);
  std::vector<double> hi(chunks, -1.0);
  std::vector<char> exact(chunks, 1);
  std::vector<char> bounded(chunks, 1);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    for (std::uint64_t idx = c * kChunk; idx < std::min(n, (c + 1) * kChunk); ++idx) {
      const AskDescriptor d = family.at(idx);
      const std::uint64_t j = family.kummer_exponent(idx);
      double sum = 0;
      for (std::uint64_t xi = on_gm ? 1 : 0; xi < q; ++xi) {
        const FieldElement x = k.element(xi);
        const std::uint64_t e_psi = k.trace(eval(k, d.f1, x));
        const std::uint64_t e_chi =
            on_gm ? (j * k.discrete_log(x)) % family.chi_order() : 0;
        // K(x) conj K(x): exponents cancel.
        const Complex z = roots_p((e_psi + k.p() - e_psi) % k.p()) *
                          roots_d((e_chi + family.chi_order() - e_chi) % family.chi_order());
        sum += z.real();
      }
      const double value = sum / static_cast<double>(q);
      lo[c] = std::min(lo[c], value);
      hi[c] = std::max(hi[c], value);
      if (sum != static_cast<double>(family.domain_size())) exact[c] = 0;
      const double bound = 3.0 * family.conductor_at(idx) / sqrt_q;
      if (!within_bound(std::abs(value - 1.0), bound)) bounded[c] = 0;
    }
  });
  rep.diagonal_members = n;
  rep.diagonal_min = n ? *std::min_element(lo.begin(), lo.end()) : 0;
  rep.diagonal_max = n ? *std::max_element(hi.begin(), hi.end()) : 0;
  rep.diagonal_exact = std::all_of(exact.begin(), exact.end(), [](char v) { return v; });
  rep.diagonal_within_bound =
      std::all_of(bounded.begin(), bounded.end(), [](char v) { return v; });
}

}  // namespace

FamilyGramReport verify_gram_family(const AskClassFamily& family, unsigned jobs) {
  const FieldSpec& k = family.field();
  FamilyGramReport rep;
  rep.q = k.q();
  rep.c = family.max_conductor();
  rep.chi_order = family.chi_order();
  rep.family_size = family.size();
  rep.domain_size = family.domain_size();
  rep.diagonal_expected = static_cast<double>(rep.domain_size) / static_cast<double>(rep.q);
  const double n = static_cast<double>(rep.family_size);
  rep.pair_count = n * (n - 1) / 2;
  const double sqrt_q = std::sqrt(static_cast<double>(rep.q));
  rep.bound = 3.0 * rep.c / sqrt_q;

  std::vector<BlockSummary> summaries(difference_block_count(family));
  for_each_difference(family, jobs, [&](std::size_t b, const DifferenceBlock& blk,
                                        const std::vector<Complex>& values) {
    BlockSummary& s = summaries[b];
    for (std::uint64_t a = 0; a < values.size(); ++a) {
      const int deg = difference_degree(blk, a);
      if (deg < 0 && blk.kummer == 0) continue;  // zero difference: diagonal
      ++s.checked;
      const double v = std::abs(values[a]);
      s.max_abs = std::max(s.max_abs, v);
      const double tight = 3.0 * family.conductor_for_degree(deg) / sqrt_q;
      s.max_tight_ratio = std::max(s.max_tight_ratio, v / tight);
      if (!within_bound(v, tight)) ++s.tight_violations;
      if (!within_bound(v, rep.bound)) {
        ++s.violations;
        if (s.records.size() < kMaxRecordedViolations) {
          FamilyDifferenceRecord r;
          r.f1.push_back(k.element(a));
          r.f1.insert(r.f1.end(), blk.top.begin(), blk.top.end());
          r.kummer = blk.kummer;
          r.value = values[a];
          r.bound = rep.bound;
          s.records.push_back(std::move(r));
        }
      }
    }
  });
  for (auto& s : summaries) {
    rep.differences_checked += s.checked;
    rep.max_offdiagonal = std::max(rep.max_offdiagonal, s.max_abs);
    rep.max_tight_ratio = std::max(rep.max_tight_ratio, s.max_tight_ratio);
    rep.tight_violations += s.tight_violations;
    rep.violation_count += s.violations;
    for (auto& r : s.records) {
      if (rep.violations.size() < kMaxRecordedViolations) rep.violations.push_back(std::move(r));
    }
  }
  exact_diagonal(family, jobs, rep);
  rep.pass = rep.violation_count == 0 && rep.tight_violations == 0 &&
             rep.diagonal_exact && rep.diagonal_within_bound;
  return rep;
}

FamilyInjectivityReport injectivity_check_family(const AskClassFamily& family,
                                                 unsigned jobs) {
  FamilyInjectivityReport rep;
  rep.q = family.field().q();
  rep.c = family.max_conductor();
  rep.family_size = family.size();
  rep.precondition_ok = 6.0 * rep.c < std::sqrt(static_cast<double>(rep.q));
  require(rep.precondition_ok, "injectivity_check: requires 6 c r^2 < sqrt(q)");
  const double norm2 =
      static_cast<double>(family.domain_size()) / static_cast<double>(rep.q);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts(difference_block_count(family));
  std::vector<double> ratios(counts.size(), 0.0);
  for_each_difference(family, jobs, [&](std::size_t b, const DifferenceBlock& blk,
                                        const std::vector<Complex>& values) {
    for (std::uint64_t a = 0; a < values.size(); ++a) {
      if (difference_degree(blk, a) < 0 && blk.kummer == 0) continue;
      ++counts[b].first;
      const double v = std::abs(values[a]);
      ratios[b] = std::max(ratios[b], v / norm2);
      if (v >= norm2 * (1.0 - kSlack)) ++counts[b].second;
    }
  });
  for (std::size_t b = 0; b < counts.size(); ++b) {
    rep.differences_checked += counts[b].first;
    rep.proportional += counts[b].second;
    rep.max_ratio = std::max(rep.max_ratio, ratios[b]);
  }
  rep.pass = rep.proportional == 0;
  return rep;
}

FamilyCodeReport code_report_family(const AskClassFamily& family, int r,
                                    std::uint64_t sample_pairs, std::uint64_t seed,
                                    unsigned jobs) {
  FamilyCodeReport out;
  CodeReport& rep = out.chain;
  const FieldSpec& k = family.field();
  rep.q = k.q();
  rep.c = family.max_conductor();
  rep.r = r;
  rep.domain_size = family.domain_size();
  fill_chain(rep);
  const double norm2 = static_cast<double>(rep.domain_size) / static_cast<double>(rep.q);

  const std::size_t blocks = difference_block_count(family);
  std::vector<std::vector<Complex>> table(blocks);
  std::vector<double> block_max(blocks, -1.0);
  std::vector<std::uint64_t> block_checked(blocks, 0);
  std::vector<std::uint64_t> block_viol(blocks, 0);
  for_each_difference(family, jobs, [&](std::size_t b, const DifferenceBlock& blk,
                                        const std::vector<Complex>& values) {
    for (std::uint64_t a = 0; a < values.size(); ++a) {
      if (difference_degree(blk, a) < 0 && blk.kummer == 0) continue;
      ++block_checked[b];
      const double cosine = values[a].real() / norm2;
      block_max[b] = std::max(block_max[b], cosine);
      if (!within_bound(cosine, rep.cosine_bound)) ++block_viol[b];
    }
    table[b] = values;
  });
  for (std::size_t b = 0; b < blocks; ++b) {
    out.differences_checked += block_checked[b];
    rep.max_cosine = std::max(rep.max_cosine, block_max[b]);
    rep.violations += block_viol[b];
  }
  rep.pairs_checked = out.differences_checked;
  rep.min_angle = std::acos(std::clamp(rep.max_cosine, -1.0, 1.0));

  if (family.size() >= 2 && sample_pairs > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, family.size() - 1);
    const std::uint64_t d = family.chi_order();
    for (std::uint64_t t = 0; t < sample_pairs; ++t) {
      const std::uint64_t i = pick(rng);
      std::uint64_t j = pick(rng);
      while (j == i) j = pick(rng);
      const TraceSample si = trace_ask(k, family.at(i));
      const TraceSample sj = trace_ask(k, family.at(j));
      const EmbeddedCode code = embed({si, sj});
      const double cosine = code.cosine[0][1];
      ++out.sampled_pairs;
      out.sampled_max_cosine = std::max(out.sampled_max_cosine, cosine);
      if (!within_bound(cosine, rep.cosine_bound)) ++out.sampled_violations;

      const auto ci = family.f1_coeffs(i);
      const auto cj = family.f1_coeffs(j);
      std::vector<FieldElement> top;
      for (std::size_t m = 1; m < ci.size(); ++m) top.push_back(k.sub(ci[m], cj[m]));
      const std::uint64_t kd =
          (family.kummer_exponent(i) + d - family.kummer_exponent(j) % d) % d;
      const std::size_t b = block_index_of(family, top, kd);
      const Complex table_value = table[b][k.sub(ci[0], cj[0]).code];
      out.max_route_discrepancy =
          std::max(out.max_route_discrepancy, std::abs(table_value.real() / norm2 - cosine));
    }
  }
  rep.pass = rep.violations == 0 && rep.chain_ok && out.sampled_violations == 0;
  return out;
}

}  // namespace tracecodes
