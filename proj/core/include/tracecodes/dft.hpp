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

#ifndef TRACECODES_DFT_HPP_
#define TRACECODES_DFT_HPP_

#include <span>

#include "tracecodes/characters.hpp"

namespace tracecodes {

// out[a] = sum_x in[x] e(sign * a x / n) with n = in.size() and sign = +1
// or -1. Unnormalized. Safe to call from several threads.
void cyclic_dft(std::span<const Complex> in, std::span<Complex> out, int sign);

}  // namespace tracecodes

#endif  // TRACECODES_DFT_HPP_
