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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diagevo/bits.hpp"
#include "diagevo/error.hpp"

namespace diagevo::boolfn {

/// An n-input function with m-bit unsigned outputs, stored densely as 2^n
/// values in ascending index order. Input bit x_i is bit (i-1) of the index.
/// Immutable once constructed.
class TruthTable {
 public:
  /// Validates length 2^n and that every value is below 2^m.
  TruthTable(unsigned n, unsigned m, std::vector<std::uint64_t> values);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  std::size_t size() const { return values_.size(); }
  std::span<const std::uint64_t> values() const { return values_; }
  std::uint64_t operator[](Mask x) const { return values_[x]; }

  bool operator==(const TruthTable &) const = default;

 private:
  unsigned n_;
  unsigned m_;
  std::vector<std::uint64_t> values_;
};

enum class PromiseClass { ConstantZero, ConstantOne, Balanced, Neither };

std::string to_string(PromiseClass c);

inline constexpr unsigned kMaxOutputWidth = 63;

TruthTable make_constant(unsigned n, unsigned bit);

/// One-hot marker: 1 at index t, 0 elsewhere.
TruthTable make_grover_marker(unsigned n, Mask t);

/// Two-to-one function with f(x) = f(x ^ s) and no other collisions. Each
/// {x, x^s} pair gets a distinct label from [0, 2^m), drawn from a
/// permutation seeded by `seed`.
TruthTable make_simon_function(unsigned n, unsigned m, Mask s,
                               std::uint64_t seed);

/// values[x] = a^x mod N over a register with 2^n >= N^2; m = ceil(log2 N).
TruthTable make_modexp_table(std::uint64_t a, std::uint64_t N, unsigned n);

/// Text format: header "n m", then 2^n decimal values one per line. Lines
/// starting with '#' are ignored.
TruthTable parse_truth_table(std::string_view text);
std::string serialize_truth_table(const TruthTable &tt);

/// Exact classification by counting ones; requires m == 1.
PromiseClass classify_promise(const TruthTable &tt);

/// Number-theory helpers shared with the order-finding pipeline.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace diagevo::boolfn
