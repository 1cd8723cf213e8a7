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

#ifndef TRACECODES_SRC_INTERNAL_HPP_
#define TRACECODES_SRC_INTERNAL_HPP_

#include <cstdint>
#include <string_view>

#include "tracecodes/field.hpp"
#include "tracecodes/poly.hpp"

namespace tracecodes::internal {

__extension__ using Uint128 = unsigned __int128;

// 64-bit FNV-1a.
class Fnv1a {
 public:
  void byte(std::uint8_t b) {
    h_ ^= b;
    h_ *= 0x100000001b3ULL;
  }
  void word(std::uint64_t w) {
    for (int i = 0; i < 8; ++i) byte(static_cast<std::uint8_t>(w >> (8 * i)));
  }
  void text(std::string_view s) {
    for (char c : s) byte(static_cast<std::uint8_t>(c));
    byte(0);
  }
  void poly(const Poly& f) {
    word(static_cast<std::uint64_t>(f.degree() + 1));
    for (auto c : f.coeffs()) word(c.code);
  }
  void field(const FieldSpec& k) {
    word(k.p());
    word(k.n());
    for (auto c : k.modulus()) word(c);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace tracecodes::internal

#endif  // TRACECODES_SRC_INTERNAL_HPP_
