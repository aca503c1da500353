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

#include <map>
#include <random>

#include "gtest/gtest.h"

using namespace diagevo;
using namespace diagevo::boolfn;

namespace {

std::vector<std::uint64_t> vals(const TruthTable &tt) {
  return {tt.values().begin(), tt.values().end()};
}

}  // namespace

TEST(truth_table, constant) {
  EXPECT_EQ(vals(make_constant(2, 0)), (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_EQ(vals(make_constant(2, 1)), (std::vector<std::uint64_t>{1, 1, 1, 1}));
  const auto t3 = make_constant(3, 1);
  EXPECT_EQ(t3.size(), 8u);
  EXPECT_EQ(t3.m(), 1u);
  for (auto v : t3.values()) EXPECT_EQ(v, 1u);
  EXPECT_THROW(make_constant(0, 0), InvalidArgument);
  EXPECT_THROW(make_constant(25, 0), ResourceLimit);
  EXPECT_THROW(make_constant(2, 2), InvalidArgument);
}

TEST(truth_table, grover_marker) {
  EXPECT_EQ(vals(make_grover_marker(2, 3)),
            (std::vector<std::uint64_t>{0, 0, 0, 1}));
  EXPECT_EQ(vals(make_grover_marker(1, 0)), (std::vector<std::uint64_t>{1, 0}));
  const auto t = make_grover_marker(3, 5);
  for (Mask x = 0; x < 8; ++x) EXPECT_EQ(t[x], x == 5 ? 1u : 0u);
  EXPECT_THROW(make_grover_marker(2, 4), InvalidArgument);
}

TEST(truth_table, simon_small_examples) {
  const auto f = make_simon_function(2, 2, 3, 0);
  EXPECT_EQ(f[0], f[3]);
  EXPECT_EQ(f[1], f[2]);
  EXPECT_NE(f[0], f[1]);

  const auto g = make_simon_function(3, 3, 5, 11);
  std::map<std::uint64_t, int> counts;
  for (auto v : g.values()) ++counts[v];
  EXPECT_EQ(counts.size(), 4u);
  for (const auto &[label, c] : counts) EXPECT_EQ(c, 2);

  EXPECT_EQ(make_simon_function(3, 3, 1, 7), make_simon_function(3, 3, 1, 7));
}

TEST(truth_table, simon_collision_structure_exhaustive) {
  std::mt19937_64 rng(2024);
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned extra : {0u, 3u, 30u}) {
      const unsigned m = n + extra;
      std::uniform_int_distribution<Mask> pick(1, dim(n) - 1);
      const Mask s = pick(rng);
      const auto f = make_simon_function(n, m, s, rng());
      std::map<std::uint64_t, std::vector<Mask>> preimages;
      for (Mask x = 0; x < f.size(); ++x) {
        ASSERT_EQ(f[x], f[x ^ s]) << "n=" << n << " s=" << s;
        ASSERT_LT(f[x], std::uint64_t{1} << m);
        preimages[f[x]].push_back(x);
      }
      // Injective on pairs: every label has exactly the preimage {x, x^s}.
      ASSERT_EQ(preimages.size(), dim(n) / 2);
      for (const auto &[label, xs] : preimages) {
        ASSERT_EQ(xs.size(), 2u);
        ASSERT_EQ(xs[0] ^ xs[1], s);
      }
    }
  }
}

TEST(truth_table, simon_errors) {
  EXPECT_THROW(make_simon_function(3, 3, 0, 0), InvalidArgument);
  EXPECT_THROW(make_simon_function(3, 2, 1, 0), InvalidArgument);
  EXPECT_THROW(make_simon_function(3, 3, 8, 0), InvalidArgument);
}

TEST(truth_table, modexp) {
  const auto t2 = make_modexp_table(2, 15, 8);
  EXPECT_EQ(t2.m(), 4u);
  EXPECT_EQ((std::vector<std::uint64_t>(t2.values().begin(),
                                        t2.values().begin() + 5)),
            (std::vector<std::uint64_t>{1, 2, 4, 8, 1}));
  const auto t7 = make_modexp_table(7, 15, 8);
  EXPECT_EQ((std::vector<std::uint64_t>(t7.values().begin(),
                                        t7.values().begin() + 5)),
            (std::vector<std::uint64_t>{1, 7, 4, 13, 1}));
  const auto ones = make_modexp_table(1, 3, 4);
  for (auto v : ones.values()) EXPECT_EQ(v, 1u);

  EXPECT_THROW(make_modexp_table(3, 15, 8), InvalidArgument);  // gcd 3
  EXPECT_THROW(make_modexp_table(2, 15, 7), InvalidArgument);  // 128 < 225
  EXPECT_THROW(make_modexp_table(2, 14, 8), InvalidArgument);  // even N
}

TEST(truth_table, mod_pow_matches_iteration) {
  for (std::uint64_t N : {3ULL, 15ULL, 21ULL, 1000003ULL}) {
    for (std::uint64_t a : {1ULL, 2ULL, 5ULL, 7ULL}) {
      std::uint64_t acc = 1 % N;
      for (std::uint64_t e = 0; e < 40; ++e) {
        ASSERT_EQ(mod_pow(a, e, N), acc);
        acc = acc * a % N;
      }
    }
  }
}

TEST(truth_table, parse_examples) {
  const auto t = parse_truth_table("2 1\n0\n1\n0\n1\n");
  EXPECT_EQ(t.n(), 2u);
  EXPECT_EQ(t.m(), 1u);
  EXPECT_EQ(vals(t), (std::vector<std::uint64_t>{0, 1, 0, 1}));

  const auto c = parse_truth_table("1 1\n1\n1\n");
  EXPECT_EQ(c.n(), 1u);
  EXPECT_EQ(classify_promise(c), PromiseClass::ConstantOne);

  const auto commented = parse_truth_table("# header next\n2 1\n0\n# mid\n1\n1\n0\n");
  EXPECT_EQ(vals(commented), (std::vector<std::uint64_t>{0, 1, 1, 0}));
}

TEST(truth_table, parse_errors) {
  EXPECT_THROW(parse_truth_table("2 1\n0\n2\n0\n1\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table(""), InvalidArgument);
  EXPECT_THROW(parse_truth_table("2\n0\n1\n0\n1\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table("2 x\n0\n1\n0\n1\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table("2 1\n0\n1\n0\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table("2 1\n0\n1\n0\n1\n1\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table("2 1\n0\n-1\n0\n1\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table("2 1\n0\n1\r\n0\n1\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table("0 1\n0\n"), InvalidArgument);
  EXPECT_THROW(parse_truth_table("2  1\n0\n1\n0\n1\n"), InvalidArgument);
}

TEST(truth_table, parse_serialize_round_trip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + rng() % 8;
    const unsigned m = 1 + rng() % 20;
    std::vector<std::uint64_t> v(dim(n));
    for (auto &x : v) x = rng() & ((std::uint64_t{1} << m) - 1);
    const TruthTable tt(n, m, v);
    ASSERT_EQ(parse_truth_table(serialize_truth_table(tt)), tt);
  }
}

TEST(truth_table, classify) {
  EXPECT_EQ(classify_promise(TruthTable(2, 1, {0, 0, 0, 0})),
            PromiseClass::ConstantZero);
  EXPECT_EQ(classify_promise(TruthTable(2, 1, {0, 1, 1, 0})),
            PromiseClass::Balanced);
  EXPECT_EQ(classify_promise(TruthTable(2, 1, {0, 1, 1, 1})),
            PromiseClass::Neither);
  EXPECT_THROW(classify_promise(TruthTable(2, 2, {0, 1, 2, 3})),
               InvalidArgument);
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_EQ(classify_promise(make_constant(n, 0)), PromiseClass::ConstantZero);
    EXPECT_EQ(classify_promise(make_constant(n, 1)), PromiseClass::ConstantOne);
  }
}

TEST(truth_table, invariants_enforced) {
  EXPECT_THROW(TruthTable(2, 1, {0, 1, 0}), InvalidArgument);
  EXPECT_THROW(TruthTable(2, 1, {0, 1, 0, 2}), InvalidArgument);
  EXPECT_THROW(TruthTable(2, 0, {0, 0, 0, 0}), InvalidArgument);
}
