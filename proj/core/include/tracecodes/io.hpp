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

// JSON and CSV forms of the library's values and reports.
//
// Elements travel as ascending coefficient lists of length n; a bare integer
// is also accepted on input for prime fields. Polynomials are lists of
// elements, constant term first. Parsing errors raise FormatError.

#ifndef TRACECODES_IO_HPP_
#define TRACECODES_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tracecodes/orthogonality.hpp"
#include "tracecodes/sheaf.hpp"

namespace tracecodes {

nlohmann::json to_json(const FieldSpec& k);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FieldSpec& k, FieldElement x);
FieldElement element_from_json(const FieldSpec& k, const nlohmann::json& j);

nlohmann::json to_json(const FieldSpec& k, const Poly& f);
Poly poly_from_json(const FieldSpec& k, const nlohmann::json& j);

nlohmann::json to_json(const FieldSpec& k, const SheafDescriptor& d);
SheafDescriptor descriptor_from_json(const FieldSpec& k, const nlohmann::json& j);

nlohmann::json to_json(const FieldSpec& k, const ConductorReport& r);

// {"field", "domain", "values": [[re, im], ...], "rank", "conductor",
//  "descriptor_id", "descriptor"}
nlohmann::json to_json(const TraceSample& s);
TraceSample sample_from_json(const nlohmann::json& j);

// A comment line naming the sample, then "x,re,im" rows. The x column holds
// the element code.
void write_sample_csv(std::ostream& out, const TraceSample& s);

// A function table on k indexed by element code: {"field", "values"}.
nlohmann::json function_table_to_json(const FieldSpec& k, const std::vector<Complex>& phi);
std::vector<Complex> function_table_from_json(const FieldSpec& k, const nlohmann::json& j);

nlohmann::json to_json(const GramReport& r);
nlohmann::json to_json(const FamilyGramReport& r);
nlohmann::json to_json(const CodeReport& r);
nlohmann::json to_json(const FamilyCodeReport& r);
nlohmann::json to_json(const InjectivityReport& r);
nlohmann::json to_json(const FamilyInjectivityReport& r);

// RFC 4180: comma separated, CRLF line ends, fields quoted when needed.
std::string csv_field(const std::string& s);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
// Header "i,j,cosine" then one row per pair i < j.
void write_cosine_csv(std::ostream& out, const EmbeddedCode& code);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace tracecodes

#endif  // TRACECODES_IO_HPP_
