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

#include "tracecodes/io.hpp"

#include <charconv>
#include <ostream>

#include "tracecodes/errors.hpp"

namespace tracecodes {

using nlohmann::json;

namespace {

template <typename Fn>
auto parse(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw FormatError("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json to_json(const FieldSpec& k) {
  json modulus = json::array();
  for (auto c : k.modulus()) modulus.push_back(c);
  return {{"p", k.p()},
          {"n", k.n()},
          {"modulus", modulus},
          {"generator", to_json(k, k.generator())}};
}

FieldSpec field_from_json(const json& j) {
  return parse("field", [&] {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto n = j.value("n", std::uint32_t{1});
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
      modulus = j["modulus"].get<std::vector<std::uint32_t>>();
    }
    FieldSpec k = FieldSpec::build(p, n, modulus);
    if (j.contains("generator") && !j["generator"].is_null()) {
      if (element_from_json(k, j["generator"]) != k.generator()) {
        throw FormatError("field: generator does not match the canonical generator");
      }
    }
    return k;
  });
}

json to_json(const FieldSpec& k, FieldElement x) { return k.coeffs(x); }

FieldElement element_from_json(const FieldSpec& k, const json& j) {
  return parse("element", [&] {
    if (j.is_number_integer()) {
      if (!k.is_prime_field()) throw FormatError("element: integers only for prime fields");
      const auto v = j.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= k.p()) {
        throw FormatError("element: integer not reduced mod p");
      }
      return k.element(static_cast<std::uint64_t>(v));
    }
    const auto c = j.get<std::vector<std::uint32_t>>();
    if (c.size() != k.n()) throw FormatError("element: expected n coefficients");
    for (auto v : c) {
      if (v >= k.p()) throw FormatError("element: coefficient not reduced mod p");
    }
    return k.from_coeffs(c);
  });
}

json to_json(const FieldSpec& k, const Poly& f) {
  json out = json::array();
  for (auto c : f.coeffs()) out.push_back(to_json(k, c));
  return out;
}

Poly poly_from_json(const FieldSpec& k, const json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be a list of coefficients");
  std::vector<FieldElement> c;
  for (const auto& e : j) c.push_back(element_from_json(k, e));
  return Poly(std::move(c));
}

json to_json(const FieldSpec& k, const SheafDescriptor& d) {
  if (const auto* a = std::get_if<AskDescriptor>(&d.value)) {
    return {{"kind", "ask"},
            {"f1", to_json(k, a->f1)},
            {"f2", {{"num", to_json(k, a->f2.num())}, {"den", to_json(k, a->f2.den())}}},
            {"psi", to_json(k, a->psi_a)},
            {"chi", a->chi_m}};
  }
  if (const auto* s = std::get_if<SupermorseDescriptor>(&d.value)) {
    return {{"kind", "supermorse"}, {"f", to_json(k, s->f)}};
  }
  const auto& ft = std::get<FourierTwistDescriptor>(d.value);
  return {{"kind", "fourier"},
          {"inner", ft.inner ? to_json(k, *ft.inner) : json(nullptr)},
          {"psi", to_json(k, ft.psi_a)}};
}

SheafDescriptor descriptor_from_json(const FieldSpec& k, const json& j) {
  return parse("descriptor", [&]() -> SheafDescriptor {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ask") {
      const Poly f1 = poly_from_json(k, j.at("f1"));
      RationalFunction f2 = RationalFunction::one(k);
      if (j.contains("f2")) {
        const json& f = j["f2"];
        if (f.is_array()) {
          f2 = RationalFunction::polynomial(k, poly_from_json(k, f));
        } else {
          f2 = RationalFunction(k, poly_from_json(k, f.at("num")),
                                f.contains("den") ? poly_from_json(k, f["den"])
                                                  : Poly::constant(k.one()));
        }
      }
      const FieldElement psi = j.contains("psi") ? element_from_json(k, j["psi"]) : k.one();
      return {make_ask(k, f1, f2, psi, j.value("chi", std::uint64_t{0}))};
    }
    if (kind == "supermorse") return {SupermorseDescriptor{poly_from_json(k, j.at("f"))}};
    if (kind == "fourier") {
      auto inner = std::make_shared<const SheafDescriptor>(descriptor_from_json(k, j.at("inner")));
      const FieldElement psi = j.contains("psi") ? element_from_json(k, j["psi"]) : k.one();
      require(psi.code != 0, "fourier twist: psi must be nontrivial");
      return {FourierTwistDescriptor{std::move(inner), psi}};
    }
    throw FormatError("descriptor: unknown kind " + kind);
  });
}

json to_json(const FieldSpec& k, const ConductorReport& r) {
  json points = json::array();
  for (const auto& s : r.singular_points) {
    points.push_back({{"at_infinity", s.at_infinity},
                      {"place", s.at_infinity ? json(nullptr) : to_json(k, s.place)},
                      {"degree", s.degree},
                      {"swan", s.swan},
                      {"tame", s.tame}});
  }
  return {{"genus", r.genus},
          {"rank", r.rank},
          {"singular_points", points},
          {"conductor", r.conductor},
          {"wild_and_tame_at_infinity", r.wild_and_tame_at_infinity}};
}

json to_json(const TraceSample& s) {
  json domain = json::array();
  json values = json::array();
  for (auto x : s.domain) domain.push_back(x.code);
  for (auto v : s.values) values.push_back(complex_json(v));
  return {{"field", to_json(s.spec)},
          {"domain", domain},
          {"values", values},
          {"rank", s.rank ? json(*s.rank) : json(nullptr)},
          {"conductor", s.conductor ? json(*s.conductor) : json(nullptr)},
          {"numeric_only", s.numeric_only},
          {"descriptor_id", s.descriptor_id},
          {"descriptor", s.descriptor ? to_json(s.spec, *s.descriptor) : json(nullptr)}};
}

TraceSample sample_from_json(const json& j) {
  return parse("sample", [&] {
    TraceSample s{field_from_json(j.at("field")), {}, {}, std::nullopt, std::nullopt, false, 0,
                  nullptr};
    if (j.contains("descriptor") && !j["descriptor"].is_null() && !j.contains("values")) {
      const SheafDescriptor d = descriptor_from_json(s.spec, j["descriptor"]);
      return make_sample(s.spec, d);
    }
    for (const auto& x : j.at("domain")) {
      const auto code = x.get<std::uint64_t>();
      if (code >= s.spec.q()) throw FormatError("sample: domain element out of range");
      s.domain.push_back(FieldElement{code});
    }
    for (const auto& v : j.at("values")) s.values.push_back(complex_from_json(v));
    if (s.domain.size() != s.values.size()) throw FormatError("sample: domain/value size mismatch");
    for (std::size_t i = 1; i < s.domain.size(); ++i) {
      if (!(s.domain[i - 1] < s.domain[i])) throw FormatError("sample: domain must ascend");
    }
    if (j.contains("rank") && !j["rank"].is_null()) s.rank = j["rank"].get<int>();
    if (j.contains("conductor") && !j["conductor"].is_null()) {
      s.conductor = j["conductor"].get<int>();
    }
    s.numeric_only = j.value("numeric_only", false);
    s.descriptor_id = j.value("descriptor_id", std::uint64_t{0});
    if (j.contains("descriptor") && !j["descriptor"].is_null()) {
      s.descriptor = std::make_shared<const SheafDescriptor>(
          descriptor_from_json(s.spec, j["descriptor"]));
    }
    return s;
  });
}

void write_sample_csv(std::ostream& out, const TraceSample& s) {
  out << "# q=" << s.spec.q() << " descriptor_id=" << s.descriptor_id
      << " conductor=" << (s.conductor ? std::to_string(*s.conductor) : "none") << "\r\n";
  write_csv_row(out, {"x", "re", "im"});
  for (std::size_t i = 0; i < s.domain.size(); ++i) {
    write_csv_row(out, {std::to_string(s.domain[i].code), format_double(s.values[i].real()),
                        format_double(s.values[i].imag())});
  }
}

json function_table_to_json(const FieldSpec& k, const std::vector<Complex>& phi) {
  json values = json::array();
  for (auto v : phi) values.push_back(complex_json(v));
  return {{"field", to_json(k)}, {"values", values}};
}

std::vector<Complex> function_table_from_json(const FieldSpec& k, const json& j) {
  return parse("function table", [&] {
    if (j.contains("field") && !(field_from_json(j["field"]) == k)) {
      throw FormatError("function table: field mismatch");
    }
    std::vector<Complex> phi;
    for (const auto& v : j.at("values")) phi.push_back(complex_from_json(v));
    if (phi.size() != k.q()) throw FormatError("function table: expected q values");
    return phi;
  });
}

json to_json(const GramReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"id1", p.id1},
                     {"id2", p.id2},
                     {"conductor", p.conductor},
                     {"value", complex_json(p.value)},
                     {"abs", std::abs(p.value)},
                     {"bound", p.bound},
                     {"isomorphic", p.isomorphic},
                     {"pass", p.pass}});
  }
  json diag = json::array();
  for (const auto& d : r.diagonal) {
    diag.push_back({{"i", d.i},
                    {"id", d.id},
                    {"rank", d.rank},
                    {"conductor", d.conductor},
                    {"value", complex_json(d.value)},
                    {"bound", d.bound},
                    {"pass", d.pass}});
  }
  return {{"q", r.q},
          {"c", r.c},
          {"domain_size", r.domain_size},
          {"common_domain", r.common_domain},
          {"pairs", pairs},
          {"diagonal", diag},
          {"violations", r.violations},
          {"max_hermitian_defect", r.max_hermitian_defect},
          {"pass", r.violations == 0}};
}

json to_json(const FamilyGramReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json f1 = json::array();
    for (auto c : v.f1) f1.push_back(c.code);
    violations.push_back({{"f1", f1},
                          {"kummer", v.kummer},
                          {"value", complex_json(v.value)},
                          {"bound", v.bound}});
  }
  return {{"q", r.q},
          {"c", r.c},
          {"chi_order", r.chi_order},
          {"family_size", r.family_size},
          {"domain_size", r.domain_size},
          {"differences_checked", r.differences_checked},
          {"pair_count", r.pair_count},
          {"bound", r.bound},
          {"max_offdiagonal", r.max_offdiagonal},
          {"tight_violations", r.tight_violations},
          {"max_tight_ratio", r.max_tight_ratio},
          {"diagonal",
           {{"members", r.diagonal_members},
            {"min", r.diagonal_min},
            {"max", r.diagonal_max},
            {"expected", r.diagonal_expected},
            {"exact", r.diagonal_exact},
            {"within_bound", r.diagonal_within_bound}}},
          {"violations", violations},
          {"violation_count", r.violation_count},
          {"pass", r.pass}};
}

json to_json(const CodeReport& r) {
  return {{"q", r.q},
          {"c", r.c},
          {"r", r.r},
          {"domain_size", r.domain_size},
          {"precondition_ok", r.precondition_ok},
          {"warning", r.warning},
          {"max_cosine", r.max_cosine},
          {"cosine_bound", r.cosine_bound},
          {"chain_bound", r.chain_bound},
          {"chain_ok", r.chain_ok},
          {"pairs_checked", r.pairs_checked},
          {"violations", r.violations},
          {"code_length", r.code_length},
          {"code_gamma", r.code_gamma},
          {"min_angle", r.min_angle},
          {"pass", r.pass}};
}

json to_json(const FamilyCodeReport& r) {
  return {{"chain", to_json(r.chain)},
          {"differences_checked", r.differences_checked},
          {"sampled_pairs", r.sampled_pairs},
          {"sampled_max_cosine", r.sampled_max_cosine},
          {"sampled_violations", r.sampled_violations},
          {"max_route_discrepancy", r.max_route_discrepancy}};
}

json to_json(const InjectivityReport& r) {
  json failing = json::array();
  for (const auto& [i, j] : r.failing_pairs) failing.push_back({i, j});
  return {{"q", r.q},
          {"c", r.c},
          {"r", r.r},
          {"pairs_checked", r.pairs_checked},
          {"proportional_pairs", r.proportional_pairs},
          {"failures", r.failures},
          {"failing_pairs", failing},
          {"pass", r.pass}};
}

json to_json(const FamilyInjectivityReport& r) {
  return {{"q", r.q},
          {"c", r.c},
          {"family_size", r.family_size},
          {"precondition_ok", r.precondition_ok},
          {"differences_checked", r.differences_checked},
          {"proportional", r.proportional},
          {"max_ratio", r.max_ratio},
          {"pass", r.pass}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

void write_cosine_csv(std::ostream& out, const EmbeddedCode& code) {
  write_csv_row(out, {"i", "j", "cosine"});
  for (std::size_t i = 0; i < code.cosine.size(); ++i) {
    for (std::size_t j = i + 1; j < code.cosine.size(); ++j) {
      write_csv_row(out, {std::to_string(i), std::to_string(j), format_double(code.cosine[i][j])});
    }
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace tracecodes
