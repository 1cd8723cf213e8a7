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

// Explicit trace-function families on the affine line.
//
//   ASK         x -> psi_a(f1(x)) chi_m(f2(x)), rank 1
//   Supermorse  x -> #{y : f(y) = x} - 1, rank deg f - 1
//   Fourier     t -> -q^{-1/2} sum_x K(x) psi(t x), numeric only
//
// Descriptors hold no FieldSpec; every operation takes the field explicitly.

#ifndef TRACECODES_SHEAF_HPP_
#define TRACECODES_SHEAF_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tracecodes/characters.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/poly.hpp"

namespace tracecodes {

struct AskDescriptor {
  Poly f1;
  RationalFunction f2;
  FieldElement psi_a;        // nonzero
  std::uint64_t chi_m = 0;   // index against the field's generator
};

struct SupermorseDescriptor {
  Poly f;
};

struct SheafDescriptor;

struct FourierTwistDescriptor {
  std::shared_ptr<const SheafDescriptor> inner;
  FieldElement psi_a;
};

struct SheafDescriptor {
  std::variant<AskDescriptor, SupermorseDescriptor, FourierTwistDescriptor> value;
};

// Validates and normalizes: psi_a nonzero, f2 nonzero, f2 replaced by 1
// when chi is trivial.
AskDescriptor make_ask(const FieldSpec& k, Poly f1, RationalFunction f2,
                       FieldElement psi_a, std::uint64_t chi_m);
// psi_1(f1) with trivial chi.
AskDescriptor make_ask(const FieldSpec& k, Poly f1);

struct SingularPoint {
  bool at_infinity = false;
  Poly place;  // monic k-irreducible; empty at infinity
  int degree = 1;
  int swan = 0;
  bool tame = true;
};

struct ConductorReport {
  int genus = 0;
  int rank = 1;
  std::vector<SingularPoint> singular_points;
  int conductor = 1;
  // Wild and tame ramification both present at infinity; the conductor
  // then uses max(1, swan) there.
  bool wild_and_tame_at_infinity = false;
};

struct TraceSample {
  FieldSpec spec;
  std::vector<FieldElement> domain;  // ascending enumeration order
  std::vector<Complex> values;
  std::optional<int> rank;
  std::optional<int> conductor;
  bool numeric_only = false;
  std::uint64_t descriptor_id = 0;
  std::shared_ptr<const SheafDescriptor> descriptor;

  bool covers_field() const { return domain.size() == spec.q(); }
};

// ---- Artin-Schreier-Kummer ----

TraceSample trace_ask(const FieldSpec& k, const AskDescriptor& d);
// Throws PreconditionError when deg f1 >= p.
ConductorReport conductor_ask(const FieldSpec& k, const AskDescriptor& d);
// Representative modulo h^p - h + C: no constant term and no monomial of
// positive degree divisible by p.
Poly ask_reduce(const FieldSpec& k, const Poly& f1);
// Monic irreducible factors with multiplicities reduced into [1, d).
std::vector<Factor> kummer_reduce(const FieldSpec& k, const RationalFunction& f2,
                                  std::uint64_t d);
// Requires equal psi_a and chi_m.
bool ask_geom_isomorphic(const FieldSpec& k, const AskDescriptor& a,
                         const AskDescriptor& b);

// Canonical ASK classes of conductor <= c for psi_1 and a fixed chi, indexed
// without materializing them.
//
// Trivial chi: f1 = a_1 x + ... + a_{c-1} x^{c-1}, f2 = 1, all on A^1.
// Nontrivial chi of order d: f2 = x^j with 1 <= j < d and
// f1 = a_1 x + ... + a_{c-2} x^{c-2}, all lisse on G_m.
//
// Index i encodes the coefficient digits base q with a_1 least significant,
// then j - 1 as the most significant digit.
class AskClassFamily {
 public:
  // Requires c >= 1 and c - 1 < p.
  AskClassFamily(FieldSpec k, int c, std::uint64_t chi_m);

  const FieldSpec& field() const { return k_; }
  int max_conductor() const { return c_; }
  std::uint64_t chi_m() const { return chi_.m(); }
  std::uint64_t chi_order() const { return chi_.order(); }
  bool trivial_chi() const { return chi_.is_trivial(); }
  // Number of free coefficients a_1, ..., a_D.
  int f1_terms() const { return terms_; }
  std::uint64_t size() const { return size_; }
  // |U(k)|: q for trivial chi, q - 1 otherwise.
  std::uint64_t domain_size() const;

  AskDescriptor at(std::uint64_t index) const;
  std::vector<FieldElement> f1_coeffs(std::uint64_t index) const;  // a_1..a_D
  std::uint64_t kummer_exponent(std::uint64_t index) const;        // j, 0 if trivial
  int conductor_at(std::uint64_t index) const;
  // Conductor of a member whose f1 has the given degree (-1 for zero).
  int conductor_for_degree(int f1_degree) const;

 private:
  FieldSpec k_;
  int c_;
  MultiplicativeCharacter chi_;
  int terms_ = 0;
  std::uint64_t size_ = 0;
};

std::vector<AskDescriptor> enumerate_ask_classes(const FieldSpec& k, int c,
                                                 std::uint64_t chi_m = 0);
// Exact size of the enumeration, without the 64-bit limit.
boost::multiprecision::cpp_int count_ask_classes(const FieldSpec& k, int c,
                                                 std::uint64_t chi_m = 0);

// ---- Supermorse ----

struct SupermorseCheck {
  bool ok = false;
  std::string reason;                   // empty when ok
  std::vector<Factor> critical_places;  // irreducible factors of f'
  int z_count = 0;                      // |Z| over the algebraic closure
  std::vector<FieldElement> z_rational; // rational critical points, ascending
  std::vector<FieldElement> s_rational; // f at z_rational, same order
  Poly s_polynomial;                    // prod (T - f(z)) over Z
};

SupermorseCheck check_supermorse(const FieldSpec& k, const Poly& f);
// Throws PreconditionError when f is not supermorse.
TraceSample trace_supermorse(const FieldSpec& k, const Poly& f);
ConductorReport conductor_supermorse(const FieldSpec& k, const Poly& f);
// Representatives of supermorse polynomials of degree 2 and 3 up to
// x -> ux + t, one per orbit of the translations f -> f + t. Requires p > 3.
std::vector<Poly> supermorse_orbit_representatives(const FieldSpec& k, int degree);

// ---- Fourier ----

// Extension by zero off the domain. Throws PreconditionError for an ASK
// descriptor with linear f1 and trivial Kummer part.
TraceSample fourier_transform(const TraceSample& s, FieldElement psi_a);

// ---- Generic ----

TraceSample make_sample(const FieldSpec& k, const SheafDescriptor& d);
std::uint64_t descriptor_id(const FieldSpec& k, const SheafDescriptor& d);
std::string kind_name(const SheafDescriptor& d);

}  // namespace tracecodes

#endif  // TRACECODES_SHEAF_HPP_
