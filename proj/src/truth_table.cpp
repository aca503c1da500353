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

#include "diagevo/truth_table.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace diagevo::boolfn {

namespace {

std::uint64_t codomain_size(unsigned m) { return std::uint64_t{1} << m; }

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InvalidArgument(
        "line " + std::to_string(line_no) + ": expected a non-negative "
        "decimal, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

TruthTable::TruthTable(unsigned n, unsigned m, std::vector<std::uint64_t> values)
    : n_(n), m_(m), values_(std::move(values)) {
  check_width(n_);
  require(m_ >= 1 && m_ <= kMaxOutputWidth,
          "output width m must be in [1, " + std::to_string(kMaxOutputWidth) +
              "]");
  require(values_.size() == dim(n_),
          "truth table needs exactly 2^n = " + std::to_string(dim(n_)) +
              " values, got " + std::to_string(values_.size()));
  const auto limit = codomain_size(m_);
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] >= limit) {
      throw InvalidArgument("value " + std::to_string(values_[x]) +
                            " at index " + std::to_string(x) +
                            " is outside the codomain [0, 2^" +
                            std::to_string(m_) + ")");
    }
  }
}

std::string to_string(PromiseClass c) {
  switch (c) {
    case PromiseClass::ConstantZero: return "ConstantZero";
    case PromiseClass::ConstantOne: return "ConstantOne";
    case PromiseClass::Balanced: return "Balanced";
    case PromiseClass::Neither: return "Neither";
  }
  return "?";
}

TruthTable make_constant(unsigned n, unsigned bit) {
  check_width(n);
  require(bit <= 1, "constant must be 0 or 1");
  return TruthTable(n, 1, std::vector<std::uint64_t>(dim(n), bit));
}

TruthTable make_grover_marker(unsigned n, Mask t) {
  check_width(n);
  require(t < dim(n), "marked index " + std::to_string(t) +
                          " out of range for n=" + std::to_string(n));
  std::vector<std::uint64_t> v(dim(n), 0);
  v[t] = 1;
  return TruthTable(n, 1, std::move(v));
}

TruthTable make_simon_function(unsigned n, unsigned m, Mask s,
                               std::uint64_t seed) {
  check_width(n);
  require(m >= n, "Simon functions need m >= n");
  require(m <= kMaxOutputWidth, "output width too large");
  require(s != 0, "Simon period s must be nonzero");
  require(s < dim(n), "Simon period s has bits above n");

  const std::size_t pairs = dim(n) / 2;
  const std::uint64_t space = codomain_size(m);
  std::mt19937_64 rng(seed);

  // Distinct labels, one per pair, in draw order.
  std::vector<std::uint64_t> labels;
  labels.reserve(pairs);
  if (space <= 4 * static_cast<std::uint64_t>(pairs)) {
    std::vector<std::uint64_t> all(space);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    labels.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(pairs));
  } else {
    std::uniform_int_distribution<std::uint64_t> draw(0, space - 1);
    std::unordered_set<std::uint64_t> used;
    while (labels.size() < pairs) {
      auto v = draw(rng);
      if (used.insert(v).second) labels.push_back(v);
    }
  }

  std::vector<std::uint64_t> values(dim(n));
  std::size_t next = 0;
  for (Mask x = 0; x < dim(n); ++x) {
    const Mask partner = x ^ s;
    if (x < partner) {
      values[x] = values[partner] = labels[next++];
    }
  }
  return TruthTable(n, m, std::move(values));
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  require(mod >= 1, "modulus must be positive");
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

TruthTable make_modexp_table(std::uint64_t a, std::uint64_t N, unsigned n) {
  require(N >= 3 && (N & 1U), "modulus N must be odd and at least 3");
  require(a >= 1, "base a must be positive");
  require(gcd(a, N) == 1, "base a=" + std::to_string(a) +
                              " is not coprime to N=" + std::to_string(N));
  check_width(n);
  require(dim(n) >= N * N, "register too small: need 2^n >= N^2");
  const auto m = static_cast<unsigned>(std::bit_width(N - 1));
  std::vector<std::uint64_t> values(dim(n));
  std::uint64_t acc = 1 % N;
  const std::uint64_t ar = a % N;
  for (auto &v : values) {
    v = acc;
    acc = acc * ar % N;
  }
  return TruthTable(n, m, std::move(values));
}

TruthTable parse_truth_table(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    lines.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }

  bool have_header = false;
  unsigned n = 0;
  unsigned m = 0;
  std::vector<std::uint64_t> values;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const auto line_no = i + 1;
    if (!line.empty() && line.front() == '#') continue;
    if (!have_header) {
      const auto sp = line.find(' ');
      if (sp == std::string_view::npos) {
        throw InvalidArgument("malformed header: expected \"n m\"");
      }
      const auto nv = parse_uint(line.substr(0, sp), line_no);
      const auto mv = parse_uint(line.substr(sp + 1), line_no);
      if (nv < 1 || nv > kMaxWidth) {
        throw InvalidArgument("header: n=" + std::to_string(nv) +
                              " outside [1, " + std::to_string(kMaxWidth) +
                              "]");
      }
      if (mv < 1 || mv > kMaxOutputWidth) {
        throw InvalidArgument("header: m=" + std::to_string(mv) +
                              " outside [1, " +
                              std::to_string(kMaxOutputWidth) + "]");
      }
      n = static_cast<unsigned>(nv);
      m = static_cast<unsigned>(mv);
      values.reserve(dim(n));
      have_header = true;
      continue;
    }
    if (values.size() == dim(n)) {
      throw InvalidArgument("wrong row count: more than 2^n = " +
                            std::to_string(dim(n)) + " values");
    }
    values.push_back(parse_uint(line, line_no));
  }
  if (!have_header) throw InvalidArgument("malformed header: empty input");
  if (values.size() != dim(n)) {
    throw InvalidArgument("wrong row count: expected " +
                          std::to_string(dim(n)) + " values, got " +
                          std::to_string(values.size()));
  }
  return TruthTable(n, m, std::move(values));
}

std::string serialize_truth_table(const TruthTable &tt) {
  std::ostringstream os;
  os << tt.n() << ' ' << tt.m() << '\n';
  for (auto v : tt.values()) os << v << '\n';
  return os.str();
}

PromiseClass classify_promise(const TruthTable &tt) {
  require(tt.m() == 1, "promise classification needs a Boolean (m=1) table");
  const auto ones = static_cast<std::size_t>(
      std::count(tt.values().begin(), tt.values().end(), 1U));
  if (ones == 0) return PromiseClass::ConstantZero;
  if (ones == tt.size()) return PromiseClass::ConstantOne;
  if (ones == tt.size() / 2 && tt.n() >= 1) return PromiseClass::Balanced;
  return PromiseClass::Neither;
}

}  // namespace diagevo::boolfn
