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

#include "diagevo/simulator.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace diagevo;
using namespace diagevo::simulator;

namespace {

double max_diff(const StateVector &a, const StateVector &b) {
  double d = 0.0;
  for (Mask x = 0; x < a.size(); ++x) d = std::max(d, std::abs(a[x] - b[x]));
  return d;
}

StateVector random_state(unsigned n, std::mt19937_64 &rng) {
  return StateVector(n, oracle::random_amplitudes(n, rng));
}

}  // namespace

TEST(uniform, amplitudes) {
  const auto s1 = uniform(1);
  EXPECT_NEAR(s1[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s1[1].real(), 1 / std::sqrt(2.0), 1e-15);
  const auto s2 = uniform(2);
  for (Mask x = 0; x < 4; ++x) EXPECT_EQ(s2[x], Amplitude(0.5, 0.0));
  for (unsigned n = 1; n <= 16; ++n) EXPECT_NEAR(uniform(n).norm(), 1.0, 1e-12);
  EXPECT_THROW(uniform(0), InvalidArgument);
  EXPECT_THROW(uniform(25), ResourceLimit);
}

TEST(state_vector, rejects_unnormalized) {
  EXPECT_THROW(StateVector(1, {1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(StateVector(1, {1.0}), InvalidArgument);
  EXPECT_THROW(StateVector::basis(2, 4), InvalidArgument);
}

TEST(apply_phases, examples) {
  std::mt19937_64 rng(20);
  const auto s = random_state(3, rng);
  EXPECT_LT(max_diff(apply_phases(s, spectrum::PhaseVector(3, std::vector<double>(8, 0.0))), s), 1e-15);

  const auto minus = apply_phases(uniform(1), spectrum::PhaseVector(1, {0, kPi}));
  EXPECT_NEAR(minus[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(minus[1].real(), -1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(minus[1].imag(), 0.0, 1e-15);

  const spectrum::PhaseVector p(3, oracle::random_reals(8, rng, -20, 20));
  const auto out = apply_phases(s, p);
  for (Mask x = 0; x < 8; ++x) EXPECT_NEAR(std::abs(out[x]), std::abs(s[x]), 1e-14);
  EXPECT_THROW(apply_phases(s, spectrum::PhaseVector(2, {0, 0, 0, 0})), InvalidArgument);
}

TEST(hadamard, examples) {
  const auto h = apply_hadamard(StateVector::basis(1, 0), 1);
  EXPECT_NEAR(h[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(h[1].real(), 1 / std::sqrt(2.0), 1e-15);
  const auto h1 = apply_hadamard(StateVector::basis(1, 1), 1);
  EXPECT_NEAR(h1[1].real(), -1 / std::sqrt(2.0), 1e-15);

  std::mt19937_64 rng(21);
  const auto s = random_state(4, rng);
  for (unsigned i = 1; i <= 4; ++i) {
    EXPECT_LT(max_diff(apply_hadamard(apply_hadamard(s, i), i), s), 1e-14);
  }
  EXPECT_THROW(apply_hadamard(s, 0), InvalidArgument);
  EXPECT_THROW(apply_hadamard(s, 5), InvalidArgument);
}

TEST(hadamard_all, matches_successive_single_hadamards) {
  std::mt19937_64 rng(22);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto s = random_state(n, rng);
    auto seq = s;
    for (unsigned i = 1; i <= n; ++i) seq = apply_hadamard(std::move(seq), i);
    ASSERT_LT(max_diff(hadamard_all(s), seq), 1e-12);
    ASSERT_NEAR(hadamard_all(s).norm(), 1.0, 1e-9);
  }
  for (unsigned n = 1; n <= 12; ++n) {
    const auto z = hadamard_all(uniform(n));
    EXPECT_NEAR(z.probability(0), 1.0, 1e-12);
  }
}

TEST(apply_qft, matches_dense_definition) {
  std::mt19937_64 rng(23);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto amps = oracle::random_amplitudes(n, rng);
    const StateVector s(n, amps);
    for (bool inverse : {false, true}) {
      const auto want = oracle::dft_direct(amps, inverse ? -1 : 1);
      const auto natural = apply_qft(s, inverse, true);
      const auto reversed = apply_qft(s, inverse, false);
      for (Mask y = 0; y < dim(n); ++y) {
        ASSERT_LT(std::abs(natural[y] - want[y]), 1e-9);
        ASSERT_LT(std::abs(reversed[reverse_bits(y, n)] - want[y]), 1e-9);
      }
    }
  }
}

TEST(apply_qft, examples) {
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_LT(max_diff(apply_qft(StateVector::basis(n, 0)), uniform(n)), 1e-12);
  }
  std::mt19937_64 rng(24);
  const auto one = random_state(1, rng);
  EXPECT_LT(max_diff(apply_qft(one), apply_hadamard(one, 1)), 1e-15);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto s = random_state(n, rng);
    const auto back = apply_qft(apply_qft(s), true);
    ASSERT_LT(max_diff(back, s), 1e-9);
    ASSERT_NEAR(apply_qft(s).norm(), 1.0, 1e-9);
  }
  EXPECT_THROW(apply_qft(uniform(21)), ResourceLimit);
}

TEST(measure, deterministic_state) {
  const auto h = measure(StateVector::basis(3, 5), 100, 1);
  EXPECT_EQ(h.shots, 100u);
  ASSERT_EQ(h.counts.size(), 1u);
  EXPECT_EQ(h.counts.at(5), 100u);
  EXPECT_THROW(measure(StateVector::basis(3, 5), 0, 1), InvalidArgument);
}

TEST(measure, binomial_bound) {
  const std::uint64_t shots = 1000000;
  const auto h = measure(uniform(1), shots, 12345);
  const double sigma = std::sqrt(shots * 0.25);
  std::uint64_t total = 0;
  for (const auto &[k, c] : h.counts) {
    total += c;
    EXPECT_LT(std::abs(static_cast<double>(c) - 0.5 * shots), 5 * sigma);
  }
  EXPECT_EQ(total, shots);
}

TEST(measure, seeded_reproducibility) {
  std::mt19937_64 rng(25);
  const auto s = random_state(5, rng);
  const auto a = measure(s, 5000, 77);
  const auto b = measure(s, 5000, 77);
  EXPECT_EQ(a.counts, b.counts);
  const auto c = measure(s, 5000, 78);
  EXPECT_NE(a.counts, c.counts);
}

TEST(measure, never_samples_zero_probability) {
  std::vector<Amplitude> a(8, 0.0);
  a[2] = 1 / std::sqrt(2.0);
  a[6] = Amplitude(0, 1 / std::sqrt(2.0));
  const auto h = measure(StateVector(3, a), 20000, 3);
  for (const auto &[k, c] : h.counts) EXPECT_TRUE(k == 2 || k == 6);
}

TEST(fidelity, examples) {
  std::mt19937_64 rng(26);
  const auto s = random_state(4, rng);
  EXPECT_NEAR(fidelity(s, s), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(StateVector::basis(2, 1), StateVector::basis(2, 2)), 0.0, 1e-15);
  auto rotated = apply_phases(s, spectrum::PhaseVector(4, std::vector<double>(16, 1.234)));
  EXPECT_NEAR(fidelity(s, rotated), 1.0, 1e-12);
  EXPECT_THROW(fidelity(s, uniform(3)), InvalidArgument);
}
