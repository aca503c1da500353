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

#include "diagevo/bench.hpp"

#include "gtest/gtest.h"

#include "diagevo/algorithms.hpp"
#include "diagevo/error.hpp"
#include "diagevo/spectrum.hpp"
#include "diagevo/truth_table.hpp"

using namespace diagevo;
using namespace diagevo::bench;

TEST(bench, laws) {
  const auto shor = sequential_gate_estimate(Kind::Shor, 8);
  EXPECT_EQ(shor.law, "n^3");
  EXPECT_EQ(shor.sequential_gates, 512u);
  EXPECT_EQ(shor.concurrent.evolutions, 1u);

  const auto qft = sequential_gate_estimate(Kind::Qft, 4);
  EXPECT_EQ(qft.law, "n^2");
  EXPECT_EQ(qft.sequential_gates, 16u);
  EXPECT_EQ(qft.concurrent.evolutions, 4u);
  EXPECT_EQ(qft.concurrent.max_order, 2u);

  const auto cps = sequential_gate_estimate(Kind::Cps, 5);
  EXPECT_EQ(cps.law, "1");
  EXPECT_EQ(cps.concurrent.max_order, 2u);
  EXPECT_EQ(cps.concurrent.nonzero_terms, 3u);

  EXPECT_EQ(sequential_gate_estimate(Kind::GeneralBoolean, 3).sequential_gates, 24u);
  EXPECT_EQ(sequential_gate_estimate(Kind::Grover, 7).sequential_gates, 7u);
  EXPECT_EQ(sequential_gate_estimate(Kind::Simon, 3, 2).sequential_gates, 48u);
  EXPECT_EQ(sequential_gate_estimate(Kind::DeutschJozsa, 5).concurrent.max_order, 4u);
}

TEST(bench, errors) {
  EXPECT_THROW(sequential_gate_estimate(Kind::Simon, 4), InvalidArgument);
  EXPECT_THROW(sequential_gate_estimate(Kind::Grover, 0), InvalidArgument);
  EXPECT_THROW(sequential_gate_estimate(Kind::Grover, kMaxEstimateWidth + 1),
               InvalidArgument);
  EXPECT_THROW(parse_kind("bogus"), InvalidArgument);
  EXPECT_THROW(representative_instance(Kind::Grover, 17, {}, 0), ResourceLimit);
}

TEST(bench, names_round_trip) {
  for (auto k : {Kind::GeneralBoolean, Kind::DeutschJozsa, Kind::Grover,
                 Kind::Shor, Kind::Simon, Kind::Cps, Kind::Qft}) {
    EXPECT_EQ(parse_kind(to_string(k)), k);
  }
}

TEST(bench, monotone_in_n) {
  for (auto k : {Kind::GeneralBoolean, Kind::DeutschJozsa, Kind::Grover,
                 Kind::Shor, Kind::Simon, Kind::Cps, Kind::Qft}) {
    std::uint64_t prev = 0;
    for (unsigned n = 1; n <= kMaxEstimateWidth; ++n) {
      const auto g = sequential_gate_estimate(k, n, 3).sequential_gates;
      ASSERT_GE(g, prev) << to_string(k) << " n=" << n;
      prev = g;
    }
  }
}

TEST(bench, representative_instances) {
  for (unsigned n = 2; n <= 8; ++n) {
    EXPECT_LE(representative_instance(Kind::DeutschJozsa, n, {}, 4).max_order, n - 1);
    EXPECT_EQ(representative_instance(Kind::Grover, n, {}, 4).max_order, n);
    EXPECT_LE(representative_instance(Kind::Simon, n, n, 4).max_order, n);
    EXPECT_EQ(representative_instance(Kind::Cps, n, {}, 4).max_order, 2u);
    EXPECT_EQ(representative_instance(Kind::Qft, n, {}, 4).max_order, 2u);
  }
  EXPECT_EQ(representative_instance(Kind::Shor, 9, {}, 0).max_order, 9u);
}

// f(x) = f(x ^ s) kills every term whose mask has odd overlap with s, so the
// full-order term survives only for even-weight s.
TEST(bench, simon_term_structure) {
  for (unsigned n = 2; n <= 8; ++n) {
    for (Mask s : {Mask{1}, Mask{3}, dim(n) - 1}) {
      const auto tt = boolfn::make_simon_function(n, n, s, 5);
      const auto cs = spectrum::compile_boolean(tt);
      for (Mask S = 1; S < dim(n); ++S) {
        if (std::popcount(S & s) % 2) ASSERT_LT(std::abs(cs.theta(S)), 1e-12);
      }
      const auto r = evolution::resources(cs);
      if (std::popcount(s) % 2 == 0) {
        EXPECT_EQ(r.max_order, n) << "n=" << n << " s=" << s;
      } else {
        EXPECT_LT(r.max_order, n);
      }
    }
  }
}

TEST(bench, qft_row_matches_schedule) {
  for (unsigned n = 2; n <= 10; ++n) {
    const auto row = sequential_gate_estimate(Kind::Qft, n).concurrent;
    const auto run = algorithms::qft_run(n, false);
    EXPECT_EQ(row.per_order, run.resources.per_order) << n;
    EXPECT_EQ(row.nonzero_terms, run.resources.nonzero_terms);
    EXPECT_EQ(row.evolutions, run.resources.evolutions);
  }
}

TEST(bench, instance_keeps_evolution_count) {
  const auto inst = representative_instance(Kind::Qft, 6, {}, 0);
  const auto e = sequential_gate_estimate(Kind::Qft, 6, {}, inst);
  EXPECT_EQ(e.concurrent_source, "instance");
  EXPECT_EQ(e.concurrent.evolutions, 6u);
}
