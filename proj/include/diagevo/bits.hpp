// Copyright 2026 The diagevo Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <numbers>

namespace diagevo {

/// Basis-state index / particle-subset mask. Bit (i-1) is particle i.
using Mask = std::uint64_t;

inline constexpr double kPi = std::numbers::pi;

inline constexpr std::size_t dim(unsigned n) { return std::size_t{1} << n; }

inline constexpr int popcount(Mask x) { return std::popcount(x); }

/// (-1)^{popcount(x & s)}
inline constexpr int parity_sign(Mask x, Mask s) {
  return (std::popcount(x & s) & 1) ? -1 : 1;
}

inline constexpr bool is_power_of_two(std::size_t v) {
  return v != 0 && (v & (v - 1)) == 0;
}

/// Reverses the low n bits of x.
inline constexpr Mask reverse_bits(Mask x, unsigned n) {
  Mask r = 0;
  for (unsigned i = 0; i < n; ++i) {
    r = (r << 1) | ((x >> i) & 1U);
  }
  return r;
}

}  // namespace diagevo
