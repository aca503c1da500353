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

#include <cstdint>
#include <optional>
#include <string>

#include "diagevo/evolution.hpp"

namespace diagevo::bench {

enum class Kind {
  GeneralBoolean,
  DeutschJozsa,
  Grover,
  Shor,
  Simon,
  Cps,
  Qft,
};

std::string to_string(Kind k);
/// Accepts the snake_case names used by to_string.
Kind parse_kind(const std::string &name);

/// Sequential gate count from an asymptotic law with unit constant, next to
/// the term structure of the concurrent construction. The count is a scaling
/// law evaluated at c = 1, not a measured gate count.
struct GateEstimate {
  Kind kind = Kind::GeneralBoolean;
  unsigned n = 0;
  std::optional<unsigned> m;
  std::string law;
  std::uint64_t constant = 1;
  std::uint64_t sequential_gates = 0;
  evolution::ResourceReport concurrent;
  /// "table_row" when derived from the term-structure template, "instance"
  /// when measured on a compiled coupling set.
  std::string concurrent_source = "table_row";
};

inline constexpr unsigned kMaxEstimateWidth = 48;

/// Throws if m is missing for Simon or the width is out of range. When
/// `instance` is given it replaces the template term structure; its
/// evolutions field is kept.
GateEstimate sequential_gate_estimate(
    Kind kind, unsigned n, std::optional<unsigned> m = {},
    std::optional<evolution::ResourceReport> instance = {});

/// Term structure of a representative compiled instance (n <= 16): a random
/// Boolean table, a random balanced table after reduction, the marker at
/// 2^n - 1, order finding for a = 2 and the largest odd N that fits, a random
/// Simon function, S_{1,2}, or the full QFT schedule.
evolution::ResourceReport representative_instance(Kind kind, unsigned n,
                                                  std::optional<unsigned> m,
                                                  std::uint64_t seed);

}  // namespace diagevo::bench
